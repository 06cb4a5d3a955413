#include "walg/cohomology.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "walg/errors.hpp"

namespace walg {

namespace {

using Mask = std::uint64_t;

struct Piece {
  std::map<Mask, std::pair<std::size_t, std::map<Exponents, std::size_t>>> blocks;
  std::size_t size = 0;

  std::optional<std::size_t> index(Mask s, const Exponents& e) const {
    auto it = blocks.find(s);
    if (it == blocks.end()) return std::nullopt;
    auto jt = it->second.second.find(e);
    if (jt == it->second.second.end()) return std::nullopt;
    return it->second.first + jt->second;
  }
};

class Complex {
 public:
  Complex(const ReductionCase& c) : c_(c), n_(c.basis.n_ell_indices) {
    if (n_.size() > 63) throw InvalidInput("n_ell too large for the cochain encoding");
    std::vector<long> pos(c.basis.dim(), -1);
    for (std::size_t s = 0; s < n_.size(); ++s) {
      pos[n_[s]] = static_cast<long>(s);
      dual_degree_.push_back(-c.basis.weights[n_[s]]);
    }
    const LieAlgebra& g = *c.basis.algebra;
    bracket_.assign(n_.size() * n_.size(), {});
    for (std::size_t a = 0; a < n_.size(); ++a)
      for (std::size_t b = 0; b < n_.size(); ++b)
        for (const auto& [k, v] : g.bracket_basis(n_[a], n_[b])) {
          if (pos[k] < 0) throw InternalError("n_ell is not closed in the adapted basis");
          bracket_[a * n_.size() + b].emplace_back(static_cast<std::size_t>(pos[k]), v);
        }
    degrees_ = c.slice.complement->degrees();
  }

  std::size_t rank_n() const { return n_.size(); }

  Piece piece(int i, int p) const {
    Piece out;
    const Mask full = n_.size() == 0 ? 0 : ((Mask{1} << n_.size()) - 1);
    for (Mask s = 0; s <= full; ++s) {
      if (std::popcount(s) != i) continue;
      int deg = 0;
      for (std::size_t t = 0; t < n_.size(); ++t)
        if (s >> t & 1u) deg += dual_degree_[t];
      if (deg > p) continue;
      std::map<Exponents, std::size_t> local;
      for (auto& e : monomials_of_degree(degrees_, p - deg)) local.emplace(e, local.size());
      const std::size_t count = local.size();
      if (count == 0) continue;
      out.blocks.emplace(s, std::make_pair(out.size, std::move(local)));
      out.size += count;
    }
    return out;
  }

  SparseMatrix differential(const Piece& src, const Piece& dst) const {
    SparseMatrix m(dst.size, src.size);
    for (const auto& [s, block] : src.blocks) {
      const auto& [offset, local] = block;
      for (const auto& [mu, li] : local) {
        const std::size_t col = offset + li;
        const auto mono = KazhdanPolynomial::monomial(c_.slice.complement, mu);
        for (std::size_t t = 0; t < n_.size(); ++t) {
          if (s >> t & 1u) continue;
          const Mask T = s | (Mask{1} << t);
          const int k = std::popcount(T & ((Mask{1} << t) - 1));
          const Rational sign = (k % 2 == 0) ? 1 : -1;
          const auto img = infinitesimal_action(c_.slice, n_[t], mono);
          for (const auto& [e, v] : img.terms().terms()) {
            auto row = dst.index(T, e);
            if (!row) throw InternalError("cochain target outside the truncation");
            m.add(*row, col, sign * v);
          }
        }
        for (std::size_t u = 0; u < n_.size(); ++u) {
          if (!(s >> u & 1u)) continue;
          const Mask rest = s & ~(Mask{1} << u);
          const Rational sign_u = (std::popcount(rest & ((Mask{1} << u) - 1)) % 2 == 0) ? 1 : -1;
          for (std::size_t a = 0; a < n_.size(); ++a) {
            if (rest >> a & 1u) continue;
            for (std::size_t b = a + 1; b < n_.size(); ++b) {
              if (rest >> b & 1u) continue;
              Rational cu = 0;
              for (const auto& [k, v] : bracket_[a * n_.size() + b])
                if (k == u) cu += v;
              if (cu == 0) continue;
              const Mask T = rest | (Mask{1} << a) | (Mask{1} << b);
              const int ka = std::popcount(T & ((Mask{1} << a) - 1));
              const int kb = std::popcount(T & ((Mask{1} << b) - 1));
              const Rational sign = ((ka + kb) % 2 == 0) ? 1 : -1;
              auto row = dst.index(T, mu);
              if (!row) throw InternalError("cochain target outside the truncation");
              m.add(*row, col, sign * sign_u * cu);
            }
          }
        }
      }
    }
    return m;
  }

 private:
  const ReductionCase& c_;
  std::vector<std::size_t> n_;
  std::vector<int> dual_degree_;
  std::vector<SparseVector> bracket_;
  std::vector<int> degrees_;
};

}  // namespace

CohomologyReport ce_cohomology(const ReductionCase& c, int i_max, int n_max) {
  Complex cx(c);
  const int r = static_cast<int>(cx.rank_n());
  if (i_max < 0 || i_max > r) throw InvalidInput("i_max must lie in 0 .. dim n_ell");
  CohomologyReport rep;
  rep.i_max = i_max;
  rep.n_max = n_max;
  for (int p = 0; p <= n_max; ++p) {
    std::vector<Piece> pieces;
    for (int i = 0; i <= std::min(i_max + 1, r); ++i) pieces.push_back(cx.piece(i, p));
    std::vector<SparseMatrix> d;
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      d.push_back(cx.differential(pieces[i], pieces[i + 1]));
      ranks.push_back(rank(d.back()));
    }
    for (std::size_t i = 1; i < d.size(); ++i)
      for (std::size_t col = 0; col < d[i - 1].cols(); ++col) {
        const Vector img = d[i - 1].apply(unit_vector(d[i - 1].cols(), col));
        if (!is_zero(d[i].apply(img))) throw InternalError("d o d != 0 in the cochain complex");
      }
    for (int i = 0; i <= i_max; ++i) {
      const std::size_t dim = pieces[i].size;
      const std::size_t out = static_cast<std::size_t>(i) < ranks.size() ? ranks[i] : 0;
      const std::size_t in = i > 0 ? ranks[i - 1] : 0;
      rep.cochain_dims[{i, p}] = dim;
      rep.dims[{i, p}] = dim - out - in;
    }
  }
  return rep;
}

}  // namespace walg
