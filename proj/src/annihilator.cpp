#include "bt/annihilator.hpp"

#include <sstream>

namespace bt {

std::string EvalPoint::str() const {
  std::ostringstream os;
  os << q0.get_str();
  if (p) os << " mod " << p;
  return os.str();
}

std::vector<EvalPoint> default_points() {
  return {{Rational(2), 1000000007}, {Rational(3), 998244353}, {Rational(5, 7), 0}};
}

namespace {

ModP reduce_mod(const Rational& x, std::uint64_t p) {
  auto lift = [p](const mpz_class& z) {
    mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    return ModP(static_cast<std::int64_t>(m.get_ui()), p);
  };
  ModP den = lift(x.get_den());
  if (den.v == 0) throw std::domain_error("evaluation point has a pole mod p");
  return lift(x.get_num()) / den;
}

template <class F>
auto with_scalars(const EvalPoint& pt, F f) {
  if (pt.p) {
    if (!is_prime(pt.p)) throw std::invalid_argument("modulus is not prime");
    ModP q = reduce_mod(pt.q0, pt.p);
    return f(at_modp(static_cast<std::int64_t>(q.v), pt.p));
  }
  return f(at_rational(pt.q0));
}

}  // namespace

std::vector<CellIndex> predicted_annihilator(int n, int N, const PartitionType& alpha) {
  return cell_indices(filter_columns(enumerate_L(n, alpha), N).beyond);
}

long predicted_dim(int n, int N, const PartitionType& alpha) {
  long d = 0;
  for (const auto& lam : filter_columns(enumerate_L(n, alpha), N).beyond) d += count_std_Lambda(lam) * count_std_Lambda(lam);
  return d;
}

long etl_dim(int n, int N, const PartitionType& alpha) {
  long d = 0;
  for (const auto& lam : filter_columns(enumerate_L(n, alpha), N).within) d += count_std_Lambda(lam) * count_std_Lambda(lam);
  return d;
}

long etl_dim(int n, int N) {
  long d = 0;
  for (const auto& alpha : integer_partitions(n)) d += etl_dim(n, N, alpha);
  return d;
}

long ptl_dim(int n) { return etl_dim(n, 2); }

long bruteforce_dim(const PartitionType& alpha, int N, const EvalPoint& pt) {
  return with_scalars(pt, [&](const auto& S) { return bruteforce_dim_at(alpha, N, S); });
}

BruteforceResult bruteforce_annihilator_dim(const PartitionType& alpha, int N, const std::vector<EvalPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("no evaluation points");
  BruteforceResult r;
  for (const auto& pt : pts) r.per_point.push_back(bruteforce_dim(alpha, N, pt));
  r.dim = *std::min_element(r.per_point.begin(), r.per_point.end());
  return r;
}

AnnihilatorReport verify_predicted_basis(int n, int N, const PartitionType& alpha, const std::vector<EvalPoint>& pts) {
  AnnihilatorReport rep;
  rep.n = n;
  rep.N = N;
  rep.alpha = alpha;
  auto idx = predicted_annihilator(n, N, alpha);
  rep.predicted = static_cast<long>(idx.size());
  for (const auto& pt : pts) rep.points.push_back(pt.str());

  rep.kills = true;
  if (n <= 3) {
    auto S = symbolic();
    for (const auto& c : idx) rep.kills = rep.kills && kills_tensor_space(n_st(c.lam, c.s, c.t, S), alpha, N, S);
  }
  rep.independent = true;
  for (const auto& pt : pts) {
    bool ok = with_scalars(pt, [&](const auto& S) {
      using R = std::decay_t<decltype(S.one)>;
      std::vector<Element<R>> els;
      bool kills = true;
      for (const auto& c : idx) {
        els.push_back(n_st(c.lam, c.s, c.t, S));
        if (n > 3) kills = kills && kills_tensor_space(els.back(), alpha, N, S);
      }
      rep.kills = rep.kills && kills;
      return rank_of(els) == idx.size();
    });
    rep.independent = rep.independent && ok;
  }
  auto bf = bruteforce_annihilator_dim(alpha, N, pts);
  rep.per_point = bf.per_point;
  rep.bruteforce = bf.dim;
  bool stable = std::all_of(bf.per_point.begin(), bf.per_point.end(), [&](long d) { return d == rep.predicted; });
  rep.match = rep.kills && rep.independent && stable && rep.predicted == rep.bruteforce;
  return rep;
}

long faithful_kernel_dim(int n, int N, int r, const EvalPoint& pt) {
  return with_scalars(pt, [&](const auto& S) { return kernel_dim_at(full_basis(n), tensor_basis(n, N, r), n, S); });
}

IndependenceReport cellular_independence(int n, const PartitionType& alpha, const EvalPoint& pt) {
  IndependenceReport rep;
  auto idx = cell_indices(n, alpha);
  rep.count = static_cast<long>(idx.size());
  with_scalars(pt, [&](const auto& S) {
    using R = std::decay_t<decltype(S.one)>;
    std::vector<Element<R>> ms, ns;
    for (const auto& c : idx) {
      ms.push_back(m_st(c.lam, c.s, c.t, S));
      ns.push_back(n_st(c.lam, c.s, c.t, S));
    }
    auto inputs = tensor_basis_alpha(alpha, n);
    rep.coord_rank_m = static_cast<long>(rank_of(ms));
    rep.coord_rank_n = static_cast<long>(rank_of(ns));
    rep.tensor_rank_m = static_cast<long>(tensor_image_rank(ms, inputs, S));
    rep.tensor_rank_n = static_cast<long>(tensor_image_rank(ns, inputs, S));
    return 0;
  });
  return rep;
}

long steinberg_ideal_dim(int n, const PartitionType& alpha, int i, const EvalPoint& pt) {
  return with_scalars(pt, [&](const auto& S) -> long {
    auto gen = project_alpha(ptl_generator(i, n, S), alpha);
    if (gen.is_zero()) return 0;
    return ideal_closure_dim(gen, S);
  });
}

}  // namespace bt
