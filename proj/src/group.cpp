#include "harmonia/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace harmonia {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> moduli)
    : moduli_(std::move(moduli)) {
  order_ = 1;
  for (long long n : moduli_) {
    if (n < 1) throw std::invalid_argument("FiniteAbelianGroup: moduli must be >= 1");
    order_ *= n;
  }
}

long long FiniteAbelianGroup::index_of(const Elem& x) const {
  if (x.size() != rank()) throw std::invalid_argument("element rank mismatch");
  long long idx = 0;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (x[k] < 0 || x[k] >= moduli_[k])
      throw std::invalid_argument("element coordinate out of range");
    idx = idx * moduli_[k] + x[k];
  }
  return idx;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::element(long long index) const {
  Elem x(rank());
  for (std::size_t k = rank(); k-- > 0;) {
    x[k] = index % moduli_[k];
    index /= moduli_[k];
  }
  return x;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(const Elem& a, const Elem& b) const {
  Elem c(rank());
  for (std::size_t k = 0; k < rank(); ++k) c[k] = (a[k] + b[k]) % moduli_[k];
  return c;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::sub(const Elem& a, const Elem& b) const {
  Elem c(rank());
  for (std::size_t k = 0; k < rank(); ++k) c[k] = ((a[k] - b[k]) % moduli_[k] + moduli_[k]) % moduli_[k];
  return c;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::neg(const Elem& a) const {
  return sub(zero(), a);
}

Rational char_turns(const GroupChar& chi, const FiniteAbelianGroup::Elem& x) {
  const auto& n = chi.group.moduli();
  if (x.size() != n.size() || chi.exponents.size() != n.size())
    throw std::invalid_argument("char_turns: rank mismatch");
  Rational turns(0);
  for (std::size_t k = 0; k < n.size(); ++k)
    turns += Rational(Int(x[k]) * Int(chi.exponents[k]), Int(n[k]));
  return rat_frac(turns);
}

Cx char_eval(const GroupChar& chi, const FiniteAbelianGroup::Elem& x) {
  return expi_turns(char_turns(chi, x));
}

GroupFun GroupFun::zero(const FiniteAbelianGroup& g, Haar haar) {
  return GroupFun{g, std::vector<Cx>(g.order(), Cx(0.0, 0.0)), haar};
}

GroupFun GroupFun::delta(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Elem& at,
                         Haar haar) {
  GroupFun f = zero(g, haar);
  f.values[g.index_of(at)] = Cx(1.0, 0.0);
  return f;
}

void GroupFun::validate() const {
  if (static_cast<long long>(values.size()) != group.order())
    throw std::invalid_argument("GroupFun: one value per group element required");
}

GroupMeasure GroupMeasure::delta(const FiniteAbelianGroup& g,
                                 const FiniteAbelianGroup::Elem& at) {
  GroupMeasure mu{g, std::vector<Cx>(g.order(), Cx(0.0, 0.0))};
  mu.mass[g.index_of(at)] = Cx(1.0, 0.0);
  return mu;
}

double haar_weight(const GroupFun& f) {
  return f.haar == Haar::Counting ? 1.0 : 1.0 / static_cast<double>(f.group.order());
}

double l1_norm(const GroupFun& f) {
  double s = 0.0;
  for (const auto& v : f.values) s += modulus(v);
  return s * haar_weight(f);
}

double l2_norm(const GroupFun& f) {
  double s = 0.0;
  for (const auto& v : f.values) s += std::norm(v);
  return std::sqrt(s * haar_weight(f));
}

double linf_norm(const GroupFun& f) {
  double s = 0.0;
  for (const auto& v : f.values) s = std::max(s, modulus(v));
  return s;
}

double total_variation(const GroupMeasure& mu) {
  double s = 0.0;
  for (const auto& v : mu.mass) s += modulus(v);
  return s;
}

namespace {

// Per-factor root lookup: roots[k][r] = exp(-2 pi i r / n_k).
std::vector<std::vector<Cx>> conj_root_tables(const FiniteAbelianGroup& g) {
  std::vector<std::vector<Cx>> roots;
  for (long long n : g.moduli()) {
    std::vector<Cx> row(n);
    for (long long r = 0; r < n; ++r) row[r] = expi_turns(Rational(Int(-r), Int(n)));
    roots.push_back(std::move(row));
  }
  return roots;
}

// In-place length-n transform X[k] = sum_j x[j] exp(-2 pi i j k / n) by
// recursive splitting at the smallest prime factor; prime lengths fall back
// to the direct sum.
void ct_transform(std::vector<Cx>& x, const std::vector<Cx>& roots_n) {
  const std::size_t n = x.size();
  if (n <= 1) return;
  std::size_t r = 2;
  while (r * r <= n && n % r != 0) ++r;
  if (r * r > n) r = n;  // prime length

  if (r == n) {
    std::vector<Cx> out(n, Cx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[k] += x[j] * roots_n[(j * k) % n];
    x = std::move(out);
    return;
  }

  const std::size_t m = n / r;
  // Split into r interleaved subsequences, transform each at length m.
  std::vector<std::vector<Cx>> sub(r, std::vector<Cx>(m));
  for (std::size_t j2 = 0; j2 < r; ++j2)
    for (std::size_t j1 = 0; j1 < m; ++j1) sub[j2][j1] = x[r * j1 + j2];
  std::vector<Cx> sub_roots(m);
  for (std::size_t t = 0; t < m; ++t) sub_roots[t] = roots_n[t * r];
  for (auto& s : sub) ct_transform(s, sub_roots);

  for (std::size_t k = 0; k < n; ++k) {
    Cx acc(0.0, 0.0);
    for (std::size_t j2 = 0; j2 < r; ++j2)
      acc += roots_n[(j2 * k) % n] * sub[j2][k % m];
    x[k] = acc;
  }
}

}  // namespace

namespace {

std::vector<FiniteAbelianGroup::Elem> all_elements(const FiniteAbelianGroup& g) {
  std::vector<FiniteAbelianGroup::Elem> out;
  out.reserve(g.order());
  for (long long i = 0; i < g.order(); ++i) out.push_back(g.element(i));
  return out;
}

}  // namespace

std::vector<Cx> dft(const GroupFun& f) {
  f.validate();
  const auto& g = f.group;
  const long long N = g.order();
  const double w = haar_weight(f);
  const auto roots = conj_root_tables(g);
  const auto& mods = g.moduli();
  const auto elems = all_elements(g);

  std::vector<Cx> fhat(N, Cx(0.0, 0.0));
  for (long long bi = 0; bi < N; ++bi) {
    const auto& b = elems[bi];
    Cx acc(0.0, 0.0);
    for (long long xi = 0; xi < N; ++xi) {
      const auto& x = elems[xi];
      Cx chi_conj(1.0, 0.0);
      for (std::size_t k = 0; k < mods.size(); ++k)
        chi_conj *= roots[k][(x[k] * b[k]) % mods[k]];
      acc += f.values[xi] * chi_conj;
    }
    fhat[bi] = acc * w;
  }
  return fhat;
}

std::vector<Cx> dft_fast(const GroupFun& f) {
  f.validate();
  const auto& g = f.group;
  const auto& mods = g.moduli();
  const long long N = g.order();
  std::vector<Cx> data = f.values;

  // Row-column pass: a 1D transform along each cyclic factor.
  long long inner = N;  // product of moduli from axis k onward
  long long outer = 1;  // product of moduli before axis k
  for (std::size_t k = 0; k < mods.size(); ++k) {
    const long long n = mods[k];
    inner /= n;
    std::vector<Cx> roots_n(n);
    for (long long r = 0; r < n; ++r) roots_n[r] = expi_turns(Rational(Int(-r), Int(n)));
    std::vector<Cx> line(n);
    for (long long o = 0; o < outer; ++o)
      for (long long i = 0; i < inner; ++i) {
        const long long base = o * n * inner + i;
        for (long long j = 0; j < n; ++j) line[j] = data[base + j * inner];
        ct_transform(line, roots_n);
        for (long long j = 0; j < n; ++j) data[base + j * inner] = line[j];
      }
    outer *= n;
  }

  const double w = haar_weight(f);
  if (w != 1.0)
    for (auto& v : data) v *= w;
  return data;
}

GroupFun idft(const FiniteAbelianGroup& g, const std::vector<Cx>& fhat, Haar haar) {
  if (static_cast<long long>(fhat.size()) != g.order())
    throw std::invalid_argument("idft: one coefficient per character required");
  const long long N = g.order();
  const auto& mods = g.moduli();
  // The dual of counting measure on A is normalized measure on the characters
  // and vice versa.
  const double w = (haar == Haar::Counting) ? 1.0 / static_cast<double>(N) : 1.0;

  std::vector<std::vector<Cx>> roots;
  for (long long n : mods) {
    std::vector<Cx> row(n);
    for (long long r = 0; r < n; ++r) row[r] = expi_turns(Rational(Int(r), Int(n)));
    roots.push_back(std::move(row));
  }

  const auto elems = all_elements(g);
  GroupFun f = GroupFun::zero(g, haar);
  for (long long xi = 0; xi < N; ++xi) {
    const auto& x = elems[xi];
    Cx acc(0.0, 0.0);
    for (long long bi = 0; bi < N; ++bi) {
      const auto& b = elems[bi];
      Cx chi(1.0, 0.0);
      for (std::size_t k = 0; k < mods.size(); ++k)
        chi *= roots[k][(x[k] * b[k]) % mods[k]];
      acc += fhat[bi] * chi;
    }
    f.values[xi] = acc * w;
  }
  return f;
}

GroupFun convolve(const GroupFun& f, const GroupFun& g) {
  f.validate();
  g.validate();
  if (f.group != g.group) throw std::invalid_argument("convolve: group mismatch");
  if (f.haar != g.haar) throw std::invalid_argument("convolve: Haar convention mismatch");
  const auto& grp = f.group;
  const long long N = grp.order();
  const double w = haar_weight(f);
  const auto& mods = grp.moduli();
  const auto elems = all_elements(grp);
  auto sub_index = [&](const FiniteAbelianGroup::Elem& x,
                       const FiniteAbelianGroup::Elem& y) {
    long long idx = 0;
    for (std::size_t k = 0; k < mods.size(); ++k)
      idx = idx * mods[k] + ((x[k] - y[k]) % mods[k] + mods[k]) % mods[k];
    return idx;
  };
  GroupFun out = GroupFun::zero(grp, f.haar);
  for (long long xi = 0; xi < N; ++xi) {
    Cx acc(0.0, 0.0);
    for (long long yi = 0; yi < N; ++yi)
      acc += f.values[sub_index(elems[xi], elems[yi])] * g.values[yi];
    out.values[xi] = acc * w;
  }
  return out;
}

GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu) {
  if (mu.group != nu.group) throw std::invalid_argument("convolve: group mismatch");
  const auto& grp = mu.group;
  const long long N = grp.order();
  GroupMeasure out{grp, std::vector<Cx>(N, Cx(0.0, 0.0))};
  for (long long ai = 0; ai < N; ++ai)
    for (long long bi = 0; bi < N; ++bi) {
      auto s = grp.add(grp.element(ai), grp.element(bi));
      out.mass[grp.index_of(s)] += mu.mass[ai] * nu.mass[bi];
    }
  return out;
}

std::vector<Cx> measure_transform(const GroupMeasure& mu) {
  GroupFun f{mu.group, mu.mass, Haar::Counting};
  return dft(f);
}

GroupFun translate(const GroupFun& f, const FiniteAbelianGroup::Elem& a) {
  f.validate();
  const auto& g = f.group;
  GroupFun out = GroupFun::zero(g, f.haar);
  for (long long xi = 0; xi < g.order(); ++xi)
    out.values[xi] = f.values[g.index_of(g.add(g.element(xi), a))];
  return out;
}

GroupFun involution(const GroupFun& f) {
  f.validate();
  const auto& g = f.group;
  GroupFun out = GroupFun::zero(g, f.haar);
  for (long long xi = 0; xi < g.order(); ++xi)
    out.values[xi] = std::conj(f.values[g.index_of(g.neg(g.element(xi)))]);
  return out;
}

GroupFun char_fun(const GroupChar& chi) {
  GroupFun f = GroupFun::zero(chi.group, Haar::Counting);
  for (long long xi = 0; xi < chi.group.order(); ++xi)
    f.values[xi] = char_eval(chi, chi.group.element(xi));
  return f;
}

std::vector<ConvEigenPair> conv_operator_spectrum(const GroupFun& theta) {
  if (theta.haar != Haar::Counting)
    throw std::invalid_argument("conv_operator_spectrum: counting Haar required");
  auto thetahat = dft(theta);
  std::vector<ConvEigenPair> out;
  const auto& g = theta.group;
  for (long long bi = 0; bi < g.order(); ++bi) {
    GroupChar chi{g, g.element(bi)};
    GroupFun phi = char_fun(chi);
    GroupFun conv = convolve(theta, phi);
    double defect = 0.0;
    for (long long xi = 0; xi < g.order(); ++xi)
      defect = std::max(defect, modulus(conv.values[xi] - thetahat[bi] * phi.values[xi]));
    out.push_back({thetahat[bi], std::move(chi), defect});
  }
  return out;
}

std::vector<FiniteAbelianGroup::Elem> subgroup_closure(
    const FiniteAbelianGroup& g, const std::vector<FiniteAbelianGroup::Elem>& generators) {
  std::set<long long> seen{g.index_of(g.zero())};
  std::vector<long long> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<long long> next;
    for (long long idx : frontier)
      for (const auto& gen : generators) {
        long long s = g.index_of(g.add(g.element(idx), gen));
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  std::vector<FiniteAbelianGroup::Elem> out;
  for (long long idx : seen) out.push_back(g.element(idx));
  return out;
}

std::vector<GroupChar> annihilator(const FiniteAbelianGroup& g,
                                   const std::vector<FiniteAbelianGroup::Elem>& generators) {
  auto subgroup = subgroup_closure(g, generators);
  std::vector<GroupChar> out;
  for (long long bi = 0; bi < g.order(); ++bi) {
    GroupChar chi{g, g.element(bi)};
    bool trivial = true;
    for (const auto& h : subgroup)
      if (char_turns(chi, h) != Rational(0)) {  // exact: chi(h) = 1 iff integer turns
        trivial = false;
        break;
      }
    if (trivial) out.push_back(std::move(chi));
  }
  if (out.size() * subgroup.size() != static_cast<std::size_t>(g.order()))
    throw std::logic_error("annihilator: count differs from |A| / |H|");
  return out;
}

std::optional<std::pair<FiniteAbelianGroup::Elem, FiniteAbelianGroup::Elem>>
second_dual_check(const FiniteAbelianGroup& g) {
  const long long N = g.order();
  // Injectivity: a != a' must admit a character separating them, i.e. no
  // nonzero d with chi(d) = 1 for every chi.  Basis characters decide this
  // exactly.
  for (long long di = 1; di < N; ++di) {
    auto d = g.element(di);
    bool separated = false;
    for (std::size_t k = 0; k < g.rank() && !separated; ++k)
      if (d[k] % g.moduli()[k] != 0) separated = true;
    if (!separated) return std::make_pair(d, g.zero());
  }
  // Tuple matching: evaluation at a agrees with the lex character of the
  // character group carrying the same exponents.  Both phases are the exact
  // rational sum a_k b_k / n_k, so equality is checked exactly on all pairs
  // for small groups and on a diagonal sweep otherwise.
  const long long cap = (N <= 256) ? N : 256;
  for (long long ai = 0; ai < cap; ++ai) {
    auto a = g.element(ai * (N / cap));
    GroupChar as_second_dual{g, a};
    for (long long bi = 0; bi < N; ++bi) {
      auto b = g.element(bi);
      GroupChar chi{g, b};
      if (char_turns(chi, a) != char_turns(as_second_dual, b))
        return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

namespace {

OrbitReport gaps_of_sorted(std::vector<double>& pts, double epsilon) {
  std::sort(pts.begin(), pts.end());
  OrbitReport rep;
  rep.max_gap = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    double next = (i + 1 < n) ? pts[i + 1] : pts[0] + 1.0;
    double gap = next - pts[i];
    if (gap > rep.max_gap) {
      rep.max_gap = gap;
      rep.gap_center = std::fmod(pts[i] + gap / 2.0, 1.0);
    }
  }
  rep.dense = rep.max_gap <= epsilon;
  return rep;
}

}  // namespace

OrbitReport orbit_density(const Rational& angle, double epsilon, long long max_iter) {
  if (!(epsilon > 0)) throw std::domain_error("orbit_density: epsilon must be positive");
  if (max_iter < 1) throw std::domain_error("orbit_density: max_iter must be >= 1");
  Rational a = rat_frac(angle);
  Int q = a.denominator();
  if (q <= Int(max_iter)) {
    // Full cycle reached: the orbit is exactly the multiples of 1/q.
    OrbitReport rep;
    rep.max_gap = 1.0 / to_double(q);
    rep.gap_center = rep.max_gap / 2.0;
    rep.dense = rep.max_gap <= epsilon;
    return rep;
  }
  // Partial cycle: exact residues j * p mod q, gaps measured in units of 1/q.
  Int p = a.numerator();
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(max_iter));
  Int r(0);
  for (long long j = 0; j < max_iter; ++j) {
    pts.push_back(to_double(Rational(r, q)));
    r += p;
    if (r >= q) r %= q;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return gaps_of_sorted(pts, epsilon);
}

OrbitReport orbit_density(double angle, double epsilon, long long max_iter) {
  if (!(epsilon > 0)) throw std::domain_error("orbit_density: epsilon must be positive");
  if (max_iter < 1) throw std::domain_error("orbit_density: max_iter must be >= 1");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(max_iter));
  double x = 0.0;
  double frac_angle = angle - std::floor(angle);
  for (long long j = 0; j < max_iter; ++j) {
    pts.push_back(x);
    x += frac_angle;
    if (x >= 1.0) x -= 1.0;
  }
  return gaps_of_sorted(pts, epsilon);
}

}  // namespace harmonia
