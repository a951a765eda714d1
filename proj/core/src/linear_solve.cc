#include "linear_solve.hh"

#include <set>
#include <stdexcept>

namespace omega::detail
{
  std::vector<rational> solve_exact(std::vector<sparse_equation> system)
  {
    const auto n = static_cast<std::uint32_t>(system.size());
    std::vector<std::set<std::uint32_t>> rows_with(n);
    for (std::uint32_t r = 0; r < n; ++r)
      for (const auto& [c, v] : system[r].coefficients)
        {
          if (c >= n)
            throw std::domain_error("linear system is not square");
          rows_with[c].insert(r);
        }

    // fill-aware column order: (current column count, column)
    std::set<std::pair<std::size_t, std::uint32_t>> pending;
    for (std::uint32_t c = 0; c < n; ++c)
      pending.emplace(rows_with[c].size(), c);

    std::vector<bool> row_done(n, false);
    // (pivot column, pivot row) in elimination order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
    order.reserve(n);

    auto reindex = [&](std::uint32_t c, std::size_t before) {
      auto it = pending.find({before, c});
      if (it != pending.end())
        {
          pending.erase(it);
          pending.emplace(rows_with[c].size(), c);
        }
    };

    while (!pending.empty())
      {
        auto [count, col] = *pending.begin();
        pending.erase(pending.begin());
        if (rows_with[col].empty())
          throw std::domain_error("singular linear system");
        const std::uint32_t pivot = *rows_with[col].begin();
        row_done[pivot] = true;
        order.emplace_back(col, pivot);

        // the pivot row leaves the active submatrix
        for (const auto& [c, v] : system[pivot].coefficients)
          {
            auto before = rows_with[c].size();
            rows_with[c].erase(pivot);
            if (c != col)
              reindex(c, before);
          }

        const rational pivot_value = system[pivot].coefficients.at(col);
        std::vector<std::uint32_t> targets(rows_with[col].begin(), rows_with[col].end());
        for (auto r : targets)
          {
            auto& row = system[r].coefficients;
            const rational factor = row.at(col) / pivot_value;
            for (const auto& [c, v] : system[pivot].coefficients)
              {
                auto before = rows_with[c].size();
                auto it = row.find(c);
                if (it == row.end())
                  {
                    row.emplace(c, -(factor * v));
                    rows_with[c].insert(r);
                  }
                else
                  {
                    it->second -= factor * v;
                    if (it->second.is_zero())
                      {
                        row.erase(it);
                        rows_with[c].erase(r);
                      }
                  }
                if (c != col && rows_with[c].size() != before)
                  reindex(c, before);
              }
            system[r].rhs -= factor * system[pivot].rhs;
          }
        // every entry of `col` outside the pivot row is now eliminated
        rows_with[col].clear();
      }

    // back substitution in reverse elimination order
    std::vector<rational> x(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      {
        auto [col, row] = *it;
        rational acc = system[row].rhs;
        rational diag;
        for (const auto& [c, v] : system[row].coefficients)
          {
            if (c == col)
              diag = v;
            else
              acc -= v * x[c];
          }
        x[col] = acc / diag;
      }
    return x;
  }
}
