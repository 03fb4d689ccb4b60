#pragma once

// Graded Betti numbers of homogeneous ideals generated by monomials and
// binomials, via the Koszul homology of S/I over Q:
//   beta_{i,j}(S/I) = dim H_i(x1..xe; S/I)_j,   beta_{i,j}(I) = beta_{i+1,j}(S/I).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nm/error.hpp"
#include "nm/ideals/monomial.hpp"
#include "nm/linalg.hpp"

namespace nm {

/// A binomial u - v with deg u = deg v.
struct Binomial {
  Monomial plus;
  Monomial minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

class GradedIdeal {
 public:
  GradedIdeal() = default;
  GradedIdeal(std::size_t nvars, std::vector<Monomial> monomials, std::vector<Binomial> binomials = {})
      : nvars_(nvars), binomials_(std::move(binomials)) {
    for (const auto& u : monomials)
      if (u.size() != nvars) throw error(error_kind::invalid_argument, "monomial has wrong number of variables");
    for (const auto& b : binomials_) {
      if (b.plus.size() != nvars || b.minus.size() != nvars)
        throw error(error_kind::invalid_argument, "binomial has wrong number of variables");
      if (degree(b.plus) != degree(b.minus))
        throw error(error_kind::invalid_argument, "binomial is not homogeneous");
    }
    monomials_ = minimalize(std::move(monomials));
  }

  explicit GradedIdeal(const MonomialIdeal& ideal) : GradedIdeal(ideal.nvars(), ideal.min_gens()) {}

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] const std::vector<Monomial>& monomial_gens() const noexcept { return monomials_; }
  [[nodiscard]] const std::vector<Binomial>& binomial_gens() const noexcept { return binomials_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> monomials_;
  std::vector<Binomial> binomials_;
};

struct KoszulLimits {
  std::int64_t max_degree = 64;
  std::size_t max_matrix_dim = 4000;
};

/// Degree-wise linear model of S/I: a standard-monomial basis in each degree
/// and normal forms of every monomial.
class GradedQuotient {
 public:
  GradedQuotient(const GradedIdeal& ideal, const KoszulLimits& limits = {}) : nvars_(ideal.nvars()) {
    for (std::int64_t d = 0;; ++d) {
      if (d > limits.max_degree)
        throw error(error_kind::not_artinian, "quotient is nonzero up to degree cap " + std::to_string(limits.max_degree));
      levels_.push_back(build_level(ideal, d, limits));
      if (levels_.back().basis.empty()) break;
    }
  }

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  /// Highest degree D with [S/I]_D != 0, or -1 when I = S.
  [[nodiscard]] std::int64_t top_degree() const noexcept { return static_cast<std::int64_t>(levels_.size()) - 2; }

  [[nodiscard]] const std::vector<Monomial>& basis(std::int64_t d) const {
    static const std::vector<Monomial> empty;
    if (d < 0 || d >= static_cast<std::int64_t>(levels_.size())) return empty;
    return levels_[static_cast<std::size_t>(d)].basis;
  }

  [[nodiscard]] HilbertFunction hilbert_function() const {
    HilbertFunction hf;
    for (const auto& l : levels_)
      if (!l.basis.empty()) hf.values.push_back(static_cast<std::int64_t>(l.basis.size()));
    return hf;
  }

  /// Coordinates of the monomial u in the standard basis of its degree.
  [[nodiscard]] std::vector<Rational> normal_form(const Monomial& u) const {
    const auto d = degree(u);
    if (d >= static_cast<std::int64_t>(levels_.size())) return {};
    const auto& l = levels_[static_cast<std::size_t>(d)];
    const auto it = l.nf.find(u);
    return it->second;
  }

 private:
  struct Level {
    std::vector<Monomial> basis;
    std::map<Monomial, std::vector<Rational>> nf;
  };

  Level build_level(const GradedIdeal& ideal, std::int64_t d, const KoszulLimits& limits) const {
    const auto mons = monomials_of_degree(nvars_, d);  // lex-first first: pivots become leading terms
    if (mons.size() > limits.max_matrix_dim)
      throw error(error_kind::resource_limit, "too many monomials in degree " + std::to_string(d));
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;

    std::vector<std::vector<Rational>> rows;
    auto add_multiples = [&](const Monomial& a, const Monomial* b) {
      const auto k = d - degree(a);
      if (k < 0) return;
      for (const auto& w : monomials_of_degree(nvars_, k)) {
        std::vector<Rational> row(mons.size());
        row[col.at(multiply(a, w))] += 1;
        if (b) row[col.at(multiply(*b, w))] -= 1;
        rows.push_back(std::move(row));
      }
    };
    for (const auto& u : ideal.monomial_gens()) add_multiples(u, nullptr);
    for (const auto& b : ideal.binomial_gens()) add_multiples(b.plus, &b.minus);

    Level level;
    std::vector<char> is_pivot(mons.size(), 0);
    Echelon ech;
    if (!rows.empty()) {
      Matrix<Rational> a(rows.size(), mons.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) a(r, c) = rows[r][c];
      ech = rref(std::move(a));
      for (auto p : ech.pivots) is_pivot[p] = 1;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    for (auto c : free_cols) level.basis.push_back(mons[c]);

    for (std::size_t c = 0; c < mons.size(); ++c) {
      std::vector<Rational> v(free_cols.size());
      if (!is_pivot[c]) {
        v[static_cast<std::size_t>(std::find(free_cols.begin(), free_cols.end(), c) - free_cols.begin())] = 1;
      } else {
        const auto r = static_cast<std::size_t>(std::find(ech.pivots.begin(), ech.pivots.end(), c) - ech.pivots.begin());
        for (std::size_t k = 0; k < free_cols.size(); ++k) v[k] = -ech.rows(r, free_cols[k]);
      }
      level.nf.emplace(mons[c], std::move(v));
    }
    return level;
  }

  std::size_t nvars_;
  std::vector<Level> levels_;
};

/// Hilbert function of S/I for a monomial+binomial ideal (artinian).
inline HilbertFunction hilbert_function(const GradedIdeal& ideal, const KoszulLimits& limits = {}) {
  return GradedQuotient(ideal, limits).hilbert_function();
}

namespace detail {

// i-subsets of {0..e-1} as sorted index lists.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t e, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < e; ++k) {
      cur.push_back(k);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

/// Graded Betti numbers of the ideal I (not of S/I).
/// Throws error_kind::not_artinian or error_kind::resource_limit.
inline BettiTable koszul_betti(const GradedIdeal& ideal, const KoszulLimits& limits = {}) {
  const GradedQuotient q(ideal, limits);
  const std::size_t e = ideal.nvars();
  const std::int64_t top = q.top_degree();
  BettiTable table;
  if (top < 0) return table;  // I = S has no resolution to speak of

  std::vector<std::vector<std::vector<std::size_t>>> subsets(e + 1);
  for (std::size_t i = 0; i <= e; ++i) subsets[i] = detail::subsets_of_size(e, i);

  auto dim = [&](std::size_t i, std::int64_t j) -> std::size_t {
    if (i > e) return 0;
    return subsets[i].size() * q.basis(j - static_cast<std::int64_t>(i)).size();
  };

  // Rank of d_i : K_{i,j} -> K_{i-1,j}, where K_{i,j} = wedge^i Q^e (x) [S/I]_{j-i}.
  auto differential_rank = [&](std::size_t i, std::int64_t j) -> std::size_t {
    if (i == 0 || i > e) return 0;
    const std::size_t src = dim(i, j), dst = dim(i - 1, j);
    if (src == 0 || dst == 0) return 0;
    if (src > limits.max_matrix_dim || dst > limits.max_matrix_dim)
      throw error(error_kind::resource_limit, "Koszul differential too large");
    const auto& src_basis = q.basis(j - static_cast<std::int64_t>(i));
    const std::size_t dst_width = q.basis(j - static_cast<std::int64_t>(i) + 1).size();
    std::map<std::vector<std::size_t>, std::size_t> dst_index;
    for (std::size_t s = 0; s < subsets[i - 1].size(); ++s) dst_index[subsets[i - 1][s]] = s;

    Matrix<Rational> m(src, dst);
    for (std::size_t s = 0; s < subsets[i].size(); ++s) {
      const auto& f = subsets[i][s];
      for (std::size_t b = 0; b < src_basis.size(); ++b) {
        const std::size_t row = s * src_basis.size() + b;
        for (std::size_t pos = 0; pos < f.size(); ++pos) {
          auto face = f;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
          const std::size_t base = dst_index.at(face) * dst_width;
          auto u = src_basis[b];
          ++u[f[pos]];
          const auto nf = q.normal_form(u);
          for (std::size_t k = 0; k < nf.size(); ++k) {
            if (nf[k] == 0) continue;
            if (pos % 2 == 0)
              m(row, base + k) += nf[k];
            else
              m(row, base + k) -= nf[k];
          }
        }
      }
    }
    return rank(m);
  };

  const std::int64_t max_j = top + static_cast<std::int64_t>(e);
  for (std::int64_t j = 0; j <= max_j; ++j) {
    std::vector<std::size_t> ranks(e + 2, 0);
    for (std::size_t i = 1; i <= e; ++i) ranks[i] = differential_rank(i, j);
    for (std::size_t i = 1; i <= e; ++i) {
      const auto h = static_cast<std::int64_t>(dim(i, j)) - static_cast<std::int64_t>(ranks[i]) -
                     static_cast<std::int64_t>(ranks[i + 1]);
      table.add(static_cast<std::int64_t>(i) - 1, j, h);
    }
  }
  return table;
}

inline BettiTable koszul_betti(const MonomialIdeal& ideal, const KoszulLimits& limits = {}) {
  return koszul_betti(GradedIdeal(ideal), limits);
}

}  // namespace nm
