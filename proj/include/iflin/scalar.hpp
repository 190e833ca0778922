#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "iflin/errors.hpp"
#include "iflin/rational.hpp"

namespace iflin {

/// Intuitionistic fuzzy scalar <mu, nu>: a membership degree and a
/// non-membership degree in [0,1] with mu + nu <= 1.
///
/// `Real` is the component type. It needs Real(0), Real(1), a total order,
/// and + / -. The library instantiates it with the exact `Rational`; any
/// other ordered field works the same way since the algebra only selects
/// among existing component values.
///
/// `+` is the lattice join <max mu, min nu> and `*` the meet
/// <min mu, max nu>, which is what Eigen's coefficient-wise expressions
/// (sum, cwiseProduct, redux) pick up on matrices of scalars.
template <typename Real>
class BasicIfScalar {
 public:
  using value_type = Real;

  /// Default-constructs the additive identity <0,1>.
  BasicIfScalar() : mu_(Real(0)), nu_(Real(1)) {}

  /// Throws ConstraintViolation unless 0 <= mu, nu <= 1 and mu + nu <= 1.
  BasicIfScalar(Real mu, Real nu) : mu_(std::move(mu)), nu_(std::move(nu)) {
    if (!is_valid(mu_, nu_)) {
      std::ostringstream os;
      os << "invalid intuitionistic fuzzy pair <" << mu_ << "," << nu_
         << ">: need 0 <= mu, nu <= 1 and mu + nu <= 1";
      throw ConstraintViolation(os.str());
    }
  }

  static bool is_valid(const Real& mu, const Real& nu) {
    const Real zero(0), one(1);
    return zero <= mu && mu <= one && zero <= nu && nu <= one &&
           mu + nu <= one;
  }

  /// <0,1>, the algebra's zero.
  static BasicIfScalar bottom() { return BasicIfScalar(); }
  /// <1,0>, the algebra's unit.
  static BasicIfScalar top() { return BasicIfScalar(Real(1), Real(0)); }

  const Real& mu() const { return mu_; }
  const Real& nu() const { return nu_; }

  friend BasicIfScalar operator+(const BasicIfScalar& a,
                                 const BasicIfScalar& b) {
    return BasicIfScalar(Trusted{}, std::max(a.mu_, b.mu_),
                         std::min(a.nu_, b.nu_));
  }
  friend BasicIfScalar operator*(const BasicIfScalar& a,
                                 const BasicIfScalar& b) {
    return BasicIfScalar(Trusted{}, std::min(a.mu_, b.mu_),
                         std::max(a.nu_, b.nu_));
  }
  BasicIfScalar& operator+=(const BasicIfScalar& b) { return *this = *this + b; }
  BasicIfScalar& operator*=(const BasicIfScalar& b) { return *this = *this * b; }

  friend bool operator==(const BasicIfScalar& a, const BasicIfScalar& b) {
    return a.mu_ == b.mu_ && a.nu_ == b.nu_;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicIfScalar& a) {
    return os << '<' << a.mu_ << ',' << a.nu_ << '>';
  }

 private:
  struct Trusted {};
  // Join and meet of valid pairs are valid, so they skip the check.
  BasicIfScalar(Trusted, Real mu, Real nu)
      : mu_(std::move(mu)), nu_(std::move(nu)) {}

  Real mu_;
  Real nu_;
};

using IfScalar = BasicIfScalar<Rational>;

template <typename Real>
BasicIfScalar<Real> join(const BasicIfScalar<Real>& a,
                         const BasicIfScalar<Real>& b) {
  return a + b;
}

template <typename Real>
BasicIfScalar<Real> meet(const BasicIfScalar<Real>& a,
                         const BasicIfScalar<Real>& b) {
  return a * b;
}

/// Partial order: a <= b iff a.mu <= b.mu and a.nu >= b.nu.
template <typename Real>
bool leq(const BasicIfScalar<Real>& a, const BasicIfScalar<Real>& b) {
  return a.mu() <= b.mu() && a.nu() >= b.nu();
}

/// Strict dominance in both components: a.mu < b.mu and a.nu > b.nu.
/// Pairs that dominate in only one component are incomparable.
template <typename Real>
bool lt(const BasicIfScalar<Real>& a, const BasicIfScalar<Real>& b) {
  return a.mu() < b.mu() && a.nu() > b.nu();
}

/// Total lexicographic order on (mu, nu), for sorting and set keys only.
template <typename Real>
bool lex_less(const BasicIfScalar<Real>& a, const BasicIfScalar<Real>& b) {
  if (a.mu() != b.mu()) return a.mu() < b.mu();
  return a.nu() < b.nu();
}

/// Parses "mu,nu" with decimal (or p/q) literals of at most six fractional
/// digits. Throws MalformedScalar or ConstraintViolation.
IfScalar parse_scalar(std::string_view text);

/// Canonical "mu,nu" rendering using shortest exact decimals.
std::string format_scalar(const IfScalar& a);

// ---------------------------------------------------------------------------
// Algebra laws, checked exhaustively over a finite set of scalars.

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

/// Checks the lattice/semiring laws of the algebra and the properties of its
/// order on every pair and triple drawn from `values`.
template <typename Real>
std::vector<LawResult> check_axioms(std::span<const BasicIfScalar<Real>> values) {
  using S = BasicIfScalar<Real>;
  const S zero = S::bottom();
  const S one = S::top();

  std::vector<LawResult> out;
  // Fixed upper bound on the number of laws; references below stay valid.
  out.reserve(32);
  auto law = [&](std::string name) -> LawResult& {
    out.push_back(LawResult{std::move(name)});
    return out.back();
  };
  auto tally = [](LawResult& r, bool ok) {
    ++r.cases;
    if (!ok) ++r.failures;
  };

  {
    auto& idem_add = law("idempotence a+a=a");
    auto& idem_mul = law("idempotence a.a=a");
    auto& bound_add0 = law("bounds a+0=a");
    auto& bound_add1 = law("bounds a+1=1");
    auto& bound_mul0 = law("bounds a.0=0");
    auto& bound_mul1 = law("bounds a.1=a");
    auto& refl = law("order reflexive");
    for (const S& a : values) {
      tally(idem_add, a + a == a);
      tally(idem_mul, a * a == a);
      tally(bound_add0, a + zero == a);
      tally(bound_add1, a + one == one);
      tally(bound_mul0, a * zero == zero);
      tally(bound_mul1, a * one == a);
      tally(refl, leq(a, a));
    }
  }
  {
    auto& comm_add = law("commutativity a+b=b+a");
    auto& comm_mul = law("commutativity a.b=b.a");
    auto& absorb_add = law("absorption a+(a.b)=a");
    auto& absorb_mul = law("absorption a.(a+b)=a");
    auto& antisym = law("order antisymmetric");
    auto& lub = law("a+b is the least upper bound");
    auto& glb = law("a.b is the greatest lower bound");
    auto& closure = law("closure of + and .");
    for (const S& a : values) {
      for (const S& b : values) {
        tally(comm_add, a + b == b + a);
        tally(comm_mul, a * b == b * a);
        tally(absorb_add, a + (a * b) == a);
        tally(absorb_mul, a * (a + b) == a);
        tally(antisym, !(leq(a, b) && leq(b, a)) || a == b);
        const S j = a + b;
        const S m = a * b;
        bool is_lub = leq(a, j) && leq(b, j);
        bool is_glb = leq(m, a) && leq(m, b);
        for (const S& c : values) {
          if (leq(a, c) && leq(b, c)) is_lub = is_lub && leq(j, c);
          if (leq(c, a) && leq(c, b)) is_glb = is_glb && leq(c, m);
        }
        tally(lub, is_lub);
        tally(glb, is_glb);
        tally(closure, S::is_valid(j.mu(), j.nu()) && S::is_valid(m.mu(), m.nu()));
      }
    }
    auto& assoc_add = law("associativity a+(b+c)=(a+b)+c");
    auto& assoc_mul = law("associativity a.(b.c)=(a.b).c");
    auto& dist_mul = law("distributivity a.(b+c)=(a.b)+(a.c)");
    auto& dist_add = law("distributivity a+(b.c)=(a+b).(a+c)");
    auto& trans = law("order transitive");
    for (const S& a : values) {
      for (const S& b : values) {
        for (const S& c : values) {
          tally(assoc_add, a + (b + c) == (a + b) + c);
          tally(assoc_mul, a * (b * c) == (a * b) * c);
          tally(dist_mul, a * (b + c) == (a * b) + (a * c));
          tally(dist_add, a + (b * c) == (a + b) * (a + c));
          tally(trans, !(leq(a, b) && leq(b, c)) || leq(a, c));
        }
      }
    }
  }
  return out;
}

}  // namespace iflin

namespace Eigen {

template <typename R>
struct NumTraits<iflin::BasicIfScalar<R>>
    : GenericNumTraits<iflin::BasicIfScalar<R>> {
  typedef iflin::BasicIfScalar<R> Real;
  typedef iflin::BasicIfScalar<R> NonInteger;
  typedef iflin::BasicIfScalar<R> Literal;
  typedef iflin::BasicIfScalar<R> Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
