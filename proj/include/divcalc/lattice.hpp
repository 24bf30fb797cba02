#pragma once

// Exact arithmetic on integral lattices: the intersection form, reflections in
// (-2)-classes, Hodge-index tests and bounded searches for isotropic classes.

#include <algorithm>
#include <cstddef>
#include <future>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "divcalc/arith.hpp"
#include "divcalc/error.hpp"

namespace divcalc {

using Coords = std::vector<Int>;
using Matrix = std::vector<std::vector<Int>>;

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool operator==(const Signature&) const = default;
};

/// An integral lattice with labeled basis, Gram matrix, a canonical class and a
/// fixed reference ample class. Immutable after construction.
class LatticeModel {
 public:
  LatticeModel(std::string name, std::vector<std::string> basis, Matrix gram, Coords canonical,
               Coords ample_ref, Int chi, std::vector<bool> effective = {})
      : name_(std::move(name)),
        basis_(std::move(basis)),
        gram_(std::move(gram)),
        canonical_(std::move(canonical)),
        ample_ref_(std::move(ample_ref)),
        chi_(chi),
        effective_(std::move(effective)) {
    const std::size_t r = basis_.size();
    if (r == 0) throw PreconditionError("lattice '" + name_ + "' has rank 0");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (basis_[i] == basis_[j])
          throw PreconditionError("lattice '" + name_ + "' repeats basis label '" + basis_[i] + "'");
    if (gram_.size() != r) throw PreconditionError("gram of '" + name_ + "' has wrong row count");
    for (const auto& row : gram_)
      if (row.size() != r) throw PreconditionError("gram of '" + name_ + "' is not square");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gram_[i][j] != gram_[j][i])
          throw PreconditionError("gram of '" + name_ + "' is not symmetric");
    if (canonical_.empty()) canonical_.assign(r, 0);
    if (canonical_.size() != r) throw PreconditionError("canonical class of '" + name_ + "' has wrong length");
    if (ample_ref_.size() != r) throw PreconditionError("ample_ref of '" + name_ + "' has wrong length");
    if (effective_.empty()) effective_.assign(r, false);
    if (effective_.size() != r) throw PreconditionError("effective flags of '" + name_ + "' have wrong length");
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const Matrix& gram() const noexcept { return gram_; }
  const Coords& canonical() const noexcept { return canonical_; }
  const Coords& ample_ref() const noexcept { return ample_ref_; }
  Int chi() const noexcept { return chi_; }
  const std::vector<bool>& effective() const noexcept { return effective_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == label) return i;
    return std::nullopt;
  }

  /// xᵀ·gram·y with checked arithmetic.
  Int form(const Coords& x, const Coords& y) const {
    if (x.size() != rank() || y.size() != rank())
      throw PreconditionError("coordinate vector length does not match rank of '" + name_ + "'");
    Int total = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      Int row = 0;
      for (std::size_t j = 0; j < rank(); ++j)
        if (y[j] != 0) row = arith::add(row, arith::mul(gram_[i][j], y[j]));
      total = arith::add(total, arith::mul(x[i], row));
    }
    return total;
  }

  /// gram·x
  Coords apply(const Coords& x) const {
    Coords out(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) out[i] = arith::add(out[i], arith::mul(gram_[i][j], x[j]));
    return out;
  }

  bool operator==(const LatticeModel&) const = default;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  Matrix gram_;
  Coords canonical_;
  Coords ample_ref_;
  Int chi_;
  std::vector<bool> effective_;
};

using ModelPtr = std::shared_ptr<const LatticeModel>;

inline ModelPtr make_model(std::string name, std::vector<std::string> basis, Matrix gram, Coords canonical,
                           Coords ample_ref, Int chi, std::vector<bool> effective = {}) {
  return std::make_shared<const LatticeModel>(std::move(name), std::move(basis), std::move(gram),
                                              std::move(canonical), std::move(ample_ref), chi,
                                              std::move(effective));
}

inline bool same_model(const ModelPtr& a, const ModelPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Numerical divisor class: integer coordinates in a LatticeModel.
///
/// `torsion_twist` records a formal summand K_S on Enriques surfaces, where K_S
/// is numerically trivial but nonzero. It never enters the intersection form;
/// sums add twists mod 2.
class DivClass {
 public:
  DivClass(ModelPtr model, Coords coords, bool torsion_twist = false)
      : model_(std::move(model)), coords_(std::move(coords)), torsion_twist_(torsion_twist) {
    if (!model_) throw PreconditionError("class without a lattice");
    if (coords_.size() != model_->rank())
      throw PreconditionError("class has " + std::to_string(coords_.size()) + " coordinates, lattice '" +
                              model_->name() + "' has rank " + std::to_string(model_->rank()));
  }

  static DivClass zero(const ModelPtr& model) { return DivClass(model, Coords(model->rank(), 0)); }

  static DivClass basis(const ModelPtr& model, std::size_t i) {
    Coords c(model->rank(), 0);
    c.at(i) = 1;
    return DivClass(model, std::move(c));
  }

  const ModelPtr& model() const noexcept { return model_; }
  const Coords& coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const { return coords_.at(i); }
  bool torsion_twist() const noexcept { return torsion_twist_; }
  std::size_t rank() const noexcept { return coords_.size(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int v) { return v == 0; });
  }

  DivClass with_twist(bool twist) const { return DivClass(model_, coords_, twist); }

  DivClass operator+(const DivClass& o) const {
    require_same(o);
    Coords c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = arith::add(coords_[i], o.coords_[i]);
    return DivClass(model_, std::move(c), torsion_twist_ != o.torsion_twist_);
  }

  DivClass operator-(const DivClass& o) const {
    require_same(o);
    Coords c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = arith::sub(coords_[i], o.coords_[i]);
    return DivClass(model_, std::move(c), torsion_twist_ != o.torsion_twist_);
  }

  DivClass operator-() const {
    Coords c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = arith::neg(coords_[i]);
    return DivClass(model_, std::move(c), torsion_twist_);
  }

  DivClass operator*(Int s) const {
    Coords c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = arith::mul(coords_[i], s);
    return DivClass(model_, std::move(c), torsion_twist_ && (s % 2 != 0));
  }

  friend DivClass operator*(Int s, const DivClass& d) { return d * s; }

  /// Numerical equality: coordinates and lattice; the torsion annotation is ignored.
  bool operator==(const DivClass& o) const { return same_model(model_, o.model_) && coords_ == o.coords_; }

  void require_same(const DivClass& o) const {
    if (!same_model(model_, o.model_))
      throw ModelMismatch("classes live in different lattices ('" + model_->name() + "' vs '" +
                          o.model_->name() + "')");
  }

 private:
  ModelPtr model_;
  Coords coords_;
  bool torsion_twist_;
};

/// The intersection pairing a·b.
inline Int pair(const DivClass& a, const DivClass& b) {
  a.require_same(b);
  return a.model()->form(a.coords(), b.coords());
}

inline Int self(const DivClass& a) { return pair(a, a); }

inline DivClass canonical_class(const ModelPtr& model) { return DivClass(model, model->canonical()); }

/// Human form in basis labels, e.g. "6H-2G1-2G2"; "0" for the zero class.
inline std::string render(const DivClass& d) {
  std::string out;
  const auto& labels = d.model()->basis();
  for (std::size_t i = 0; i < d.rank(); ++i) {
    Int c = d[i];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    Int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += labels[i];
  }
  if (out.empty()) out = "0";
  if (d.torsion_twist()) out += "+K_S";
  return out;
}

inline bool lex_less(const Coords& a, const Coords& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Signature

namespace detail {

using WideMatrix = std::vector<std::vector<Wide>>;

/// Characteristic polynomial coefficients c[0..n] of det(xI - A), c[n] = 1
/// (Faddeev–LeVerrier; every division is exact over the integers).
inline std::vector<Wide> charpoly(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Wide> c(n + 1, 0);
  c[n] = 1;
  WideMatrix m(n, std::vector<Wide>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    WideMatrix next(n, std::vector<Wide>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Wide s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (a[i][l] != 0 && m[l][j] != 0) s = arith::wadd(s, arith::wmul(Wide(a[i][l]), m[l][j]));
        next[i][j] = s;
      }
      next[i][i] = arith::wadd(next[i][i], c[n - k + 1]);
    }
    Wide trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (a[i][l] != 0) trace = arith::wadd(trace, arith::wmul(Wide(a[i][l]), next[l][i]));
    c[n - k] = -trace / Wide(k);
    m = std::move(next);
  }
  return c;
}

inline int sign_changes(const std::vector<Wide>& seq) {
  int changes = 0;
  int last = 0;
  for (Wide v : seq) {
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Inertia of the Gram matrix. The characteristic polynomial of a real
/// symmetric matrix has only real roots, so Descartes' rule counts the
/// positive and negative eigenvalues exactly.
inline Signature signature(const LatticeModel& model) {
  std::vector<Wide> c = detail::charpoly(model.gram());
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0) ++z;
  std::vector<Wide> pos, negx;
  for (std::size_t i = c.size(); i-- > z;) {
    pos.push_back(c[i]);
    negx.push_back((i % 2 == 0) ? c[i] : -c[i]);
  }
  Signature s;
  s.zero = static_cast<int>(z);
  s.positive = detail::sign_changes(pos);
  s.negative = detail::sign_changes(negx);
  return s;
}

inline bool is_hyperbolic(const LatticeModel& model) {
  Signature s = signature(model);
  return s.positive == 1 && s.negative == static_cast<int>(model.rank()) - 1 && s.zero == 0;
}

/// Violations of the LatticeModel invariants (empty when none).
inline std::vector<std::string> check_invariants(const LatticeModel& model) {
  std::vector<std::string> problems;
  Signature s = signature(model);
  if (!(s.positive == 1 && s.zero == 0 && s.negative == static_cast<int>(model.rank()) - 1))
    problems.push_back("signature is (" + std::to_string(s.positive) + ", " + std::to_string(s.negative) +
                       ") with " + std::to_string(s.zero) + "-dimensional kernel, expected (1, " +
                       std::to_string(model.rank() - 1) + ")");
  if (model.form(model.ample_ref(), model.ample_ref()) <= 0)
    problems.push_back("ample_ref has non-positive self-intersection");
  for (std::size_t i = 0; i < model.rank(); ++i) {
    if (!model.effective()[i]) continue;
    Coords e(model.rank(), 0);
    e[i] = 1;
    if (model.form(model.ample_ref(), e) <= 0)
      problems.push_back("ample_ref does not meet effective label '" + model.basis()[i] + "' positively");
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Reflection and Hodge index

/// Reflection in a (-2)-class: A = L + (L·Δ)Δ, so A² = L² and A·Δ = -(L·Δ).
inline DivClass reflect_nodal(const DivClass& L, const DivClass& delta) {
  if (self(delta) != -2) throw PreconditionError("reflection requires a class with self-intersection -2");
  return L + delta * pair(L, delta);
}

enum class HodgeOutcome {
  Pass,               // (L·C)² > L²C²
  Fail,               // (L·C)² < L²C²
  Equality,           // equality, and C = λL holds integrally
  FailByIntegrality,  // equality, but no integral proportionality exists
};

inline const char* to_string(HodgeOutcome o) {
  switch (o) {
    case HodgeOutcome::Pass: return "pass";
    case HodgeOutcome::Fail: return "fail";
    case HodgeOutcome::Equality: return "equality_case";
    case HodgeOutcome::FailByIntegrality: return "fail_by_integrality";
  }
  return "?";
}

/// Reduced fraction num/den with den > 0.
struct Ratio {
  Int num = 0;
  Int den = 1;

  static Ratio make(Int n, Int d) {
    if (d == 0) throw PreconditionError("zero denominator");
    if (d < 0) {
      n = arith::neg(n);
      d = arith::neg(d);
    }
    Int g = arith::gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }

  bool operator==(const Ratio&) const = default;
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

struct HodgeVerdict {
  HodgeOutcome outcome = HodgeOutcome::Pass;
  Wide lc_squared = 0;  // (L·C)²
  Wide product = 0;     // L²·C²
  std::optional<Ratio> lambda;  // C = λL on the equality branch

  bool passes() const { return outcome == HodgeOutcome::Pass || outcome == HodgeOutcome::Equality; }
};

namespace detail {
inline HodgeVerdict hodge_compare(Int l2, Int c2, Int lc) {
  if (l2 <= 0 || c2 <= 0) throw PreconditionError("Hodge filter needs L² > 0 and C² > 0");
  HodgeVerdict v;
  v.lc_squared = arith::wmul(lc, lc);
  v.product = arith::wmul(l2, c2);
  if (v.lc_squared > v.product)
    v.outcome = HodgeOutcome::Pass;
  else if (v.lc_squared < v.product)
    v.outcome = HodgeOutcome::Fail;
  else
    v.outcome = HodgeOutcome::Equality;
  return v;
}
}  // namespace detail

/// (L·C)² ≥ L²C² for L², C² > 0, with the equality branch resolved by an
/// exact proportionality test C·L² = (L·C)·L.
inline HodgeVerdict hodge_filter(const DivClass& L, const DivClass& C) {
  HodgeVerdict v = detail::hodge_compare(self(L), self(C), pair(L, C));
  if (v.outcome != HodgeOutcome::Equality) return v;
  const Int l2 = self(L);
  const Int lc = pair(L, C);
  for (std::size_t i = 0; i < L.rank(); ++i) {
    if (arith::mul(C[i], l2) != arith::mul(lc, L[i])) {
      v.outcome = HodgeOutcome::FailByIntegrality;
      return v;
    }
  }
  v.lambda = Ratio::make(lc, l2);
  return v;
}

/// Variant for a hypothetical L known only through L² and L·C. On equality the
/// only candidate is L = (L²/(L·C))·C, which must be integral.
inline HodgeVerdict hodge_filter(Int l2, Int lc, const DivClass& C) {
  HodgeVerdict v = detail::hodge_compare(l2, self(C), lc);
  if (v.outcome != HodgeOutcome::Equality) return v;
  for (std::size_t i = 0; i < C.rank(); ++i) {
    if (arith::mul(l2, C[i]) % lc != 0) {
      v.outcome = HodgeOutcome::FailByIntegrality;
      return v;
    }
  }
  v.lambda = Ratio::make(lc, l2);
  return v;
}

// ---------------------------------------------------------------------------
// Box scans

/// Largest number of lattice points a single box scan may visit.
inline constexpr Wide kMaxBoxCells = Wide(2'000'000'000);

namespace detail {

inline Wide box_cells(const Coords& bounds) {
  Wide cells = 1;
  for (Int b : bounds) {
    if (b < 0) throw PreconditionError("negative box bound");
    cells = arith::wmul(cells, Wide(2) * b + 1);
    if (cells > kMaxBoxCells) throw SearchError("box of " + std::to_string(bounds.size()) +
                                                " coordinates exceeds the scan limit");
  }
  return cells;
}

/// Visit every x with |x_i| <= bounds[i]. `visit(x, out)` appends results to
/// a per-worker vector; the workers split the first coordinate. The merged
/// output is in worker order, so callers sort it into their canonical order.
template <class T, class Visit>
std::vector<T> scan_box(const Coords& bounds, Visit visit) {
  box_cells(bounds);
  const std::size_t r = bounds.size();
  if (r == 0) return {};
  auto run = [&](Int first_lo, Int first_hi) {
    std::vector<T> out;
    Coords x(r);
    for (std::size_t i = 1; i < r; ++i) x[i] = -bounds[i];
    for (Int v = first_lo; v <= first_hi; ++v) {
      x[0] = v;
      for (std::size_t i = 1; i < r; ++i) x[i] = -bounds[i];
      while (true) {
        visit(static_cast<const Coords&>(x), out);
        std::size_t i = r;
        while (i-- > 1) {
          if (x[i] < bounds[i]) {
            ++x[i];
            break;
          }
          x[i] = -bounds[i];
        }
        if (i == 0 || i == static_cast<std::size_t>(-1)) break;
      }
    }
    return out;
  };

  const Int span = 2 * bounds[0] + 1;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (static_cast<Int>(workers) > span) workers = static_cast<unsigned>(span);
  if (workers <= 1) return run(-bounds[0], bounds[0]);

  std::vector<std::future<std::vector<T>>> parts;
  Int start = -bounds[0];
  for (unsigned w = 0; w < workers; ++w) {
    Int count = span / workers + (static_cast<Int>(w) < span % workers ? 1 : 0);
    Int lo = start, hi = start + count - 1;
    start += count;
    parts.push_back(std::async(std::launch::async, run, lo, hi));
  }
  std::vector<T> merged;
  for (auto& p : parts) {
    auto part = p.get();
    merged.insert(merged.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return merged;
}

/// Determinant of a positive definite matrix by fraction-free elimination.
/// Returns nullopt if some leading principal minor is not positive.
inline std::optional<Wide> posdef_det(WideMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Wide(1);
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] <= 0) return std::nullopt;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = arith::wsub(arith::wmul(m[k][k], m[i][j]), arith::wmul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  if (m[n - 1][n - 1] <= 0) return std::nullopt;
  return m[n - 1][n - 1];
}

}  // namespace detail

/// Coordinate box containing every x with 2(x·v)² − v²·x² ≤ t.
///
/// For v² > 0 in a lattice of signature (1, r−1) the quadratic form
/// Q(x) = 2(x·v)² − v²·x² is positive definite, so the region is an ellipsoid
/// and max |x_i| = sqrt(t·(Q⁻¹)_ii), computed here from exact minors. Returns
/// nullopt when Q is not positive definite.
inline std::optional<Coords> majorant_box(const LatticeModel& model, const Coords& v, Wide t) {
  const std::size_t r = model.rank();
  const Int v2 = model.form(v, v);
  if (v2 <= 0) return std::nullopt;
  const Coords w = model.apply(v);
  detail::WideMatrix q(r, std::vector<Wide>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      q[i][j] = arith::wsub(arith::wmul(2 * Wide(w[i]), Wide(w[j])), arith::wmul(Wide(v2), Wide(model.gram()[i][j])));
  auto det = detail::posdef_det(q);
  if (!det) return std::nullopt;
  Coords bounds(r);
  for (std::size_t i = 0; i < r; ++i) {
    detail::WideMatrix minor;
    for (std::size_t a = 0; a < r; ++a) {
      if (a == i) continue;
      std::vector<Wide> row;
      for (std::size_t b = 0; b < r; ++b)
        if (b != i) row.push_back(q[a][b]);
      minor.push_back(std::move(row));
    }
    auto m = detail::posdef_det(minor);
    if (!m) return std::nullopt;
    Wide scaled = arith::wmul(t, *m) / *det;
    bounds[i] = arith::narrow(arith::isqrt(scaled));
  }
  return bounds;
}

// ---------------------------------------------------------------------------
// Isotropic classes

struct IsotropicHit {
  DivClass F;
  Int value;  // |F·target|
};

namespace detail {
inline void sort_hits(std::vector<IsotropicHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const IsotropicHit& a, const IsotropicHit& b) {
    if (a.value != b.value) return a.value < b.value;
    return lex_less(a.F.coords(), b.F.coords());
  });
}

inline std::vector<IsotropicHit> isotropic_in_box(const ModelPtr& model, const DivClass& target,
                                                  const Coords& bounds) {
  const Coords w = model->apply(target.coords());
  auto raw = scan_box<std::pair<Coords, Int>>(bounds, [&](const Coords& x, auto& out) {
    bool nonzero = false;
    for (Int v : x) nonzero = nonzero || v != 0;
    if (!nonzero || model->form(x, x) != 0) return;
    Int dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) dot = arith::add(dot, arith::mul(x[i], w[i]));
    out.emplace_back(x, dot < 0 ? -dot : dot);
  });
  std::vector<IsotropicHit> hits;
  hits.reserve(raw.size());
  for (auto& [x, value] : raw) hits.push_back({DivClass(model, std::move(x)), value});
  sort_hits(hits);
  return hits;
}
}  // namespace detail

/// Every nonzero F with coordinates in [−box, box] and F² = 0, ordered by
/// |F·target| and then lexicographically. Exact inside the box only.
inline std::vector<IsotropicHit> isotropic_search(const ModelPtr& model, const DivClass& target, Int box) {
  if (box < 1) throw PreconditionError("isotropic_search needs box_bound >= 1");
  if (!same_model(model, target.model())) throw ModelMismatch("target is not a class of '" + model->name() + "'");
  return detail::isotropic_in_box(model, target, Coords(model->rank(), box));
}

// ---------------------------------------------------------------------------
// Orthogonality of effective classes with non-negative squares

enum class Lemma10Outcome { Positive, ProportionalIsotropic, Violation };

inline const char* to_string(Lemma10Outcome o) {
  switch (o) {
    case Lemma10Outcome::Positive: return "positive";
    case Lemma10Outcome::ProportionalIsotropic: return "proportional_isotropic";
    case Lemma10Outcome::Violation: return "violation";
  }
  return "?";
}

struct Lemma10Verdict {
  Lemma10Outcome outcome;
  Int product;  // A·B
  std::optional<DivClass> primitive;  // F with A = aF, B = bF
  Int a = 0;
  Int b = 0;
  std::string note;
};

/// Primitive part of a nonzero class: d = m·F with m > 0 and F primitive.
inline std::pair<DivClass, Int> primitive_part(const DivClass& d) {
  Int g = 0;
  for (Int v : d.coords()) g = arith::gcd(g, v);
  if (g == 0) throw PreconditionError("the zero class has no primitive part");
  Coords c(d.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = d[i] / g;
  return {DivClass(d.model(), std::move(c)), g};
}

/// For effective A, B with A², B² ≥ 0 (effectivity is the caller's claim):
/// A·B ≥ 0, and A·B = 0 only for positive multiples of one primitive
/// isotropic F. Any other outcome means the effectivity claim was wrong.
inline Lemma10Verdict check_lemma10(const DivClass& A, const DivClass& B) {
  const Int ab = pair(A, B);
  if (self(A) < 0 || self(B) < 0)
    return {Lemma10Outcome::Violation, ab, std::nullopt, 0, 0, "a class has negative self-intersection"};
  if (ab > 0) return {Lemma10Outcome::Positive, ab, std::nullopt, 0, 0, ""};
  if (ab < 0) return {Lemma10Outcome::Violation, ab, std::nullopt, 0, 0, "A·B < 0 contradicts effectivity"};
  if (A.is_zero() || B.is_zero())
    return {Lemma10Outcome::Violation, ab, std::nullopt, 0, 0, "an effective class cannot be zero"};
  auto [fa, ma] = primitive_part(A);
  auto [fb, mb] = primitive_part(B);
  if (!(fa == fb) || self(fa) != 0)
    return {Lemma10Outcome::Violation, ab, std::nullopt, 0, 0,
            "A·B = 0 but A, B are not multiples of a common isotropic class"};
  return {Lemma10Outcome::ProportionalIsotropic, ab, fa, ma, mb, ""};
}

}  // namespace divcalc
