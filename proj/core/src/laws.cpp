#include "ptri/laws.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ptri/format.hpp"
#include "ptri/operators.hpp"
#include "ptri/prob_oracle.hpp"

namespace ptri {

std::vector<double> grid_points(double step) {
  if (!(step > 0.0 && step <= 0.5)) {
    throw std::invalid_argument("grid step must lie in (0, 0.5], got " + format_number(step));
  }
  std::vector<double> pts;
  const double inverse = 1.0 / step;
  const long long n = std::llround(inverse);
  if (std::fabs(static_cast<double>(n) * step - 1.0) < 1e-9) {
    // k/n is closer to the intended decimal than k*step.
    for (long long k = 0; k <= n; ++k) pts.push_back(static_cast<double>(k) / static_cast<double>(n));
    return pts;
  }
  for (long long k = 0; static_cast<double>(k) * step <= 1.0; ++k) pts.push_back(static_cast<double>(k) * step);
  if (pts.back() < 1.0) pts.push_back(1.0);
  return pts;
}

std::vector<Interval> interval_grid(double step) {
  const auto pts = grid_points(step);
  return intervals_over(pts);
}

namespace {

class Law {
 public:
  explicit Law(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.checked;
    if (ok) return;
    ++result_.failed;
    if (!result_.counterexample) result_.counterexample = describe();
  }

  LawResult done() { return std::move(result_); }

 private:
  LawResult result_;
};

std::string show(const Interval& x) { return to_string_exact(x); }

std::string show(const Interval& x, const Interval& y) { return "x=" + show(x) + " y=" + show(y); }

std::string show(const Interval& x, const Interval& y, const Interval& z) {
  return show(x, y) + " z=" + show(z);
}

bool same(const Interval& a, const Interval& b) { return approx_equal(a, b); }

bool tp_leq(const Interval& a, const Interval& b) { return holds_leq(cmp_tp(a, b)); }

using Op = Interval (*)(const Interval&, const Interval&);

struct NamedOp {
  const char* name;
  Op op;
};

const Interval kZero = Interval::zero();
const Interval kOne = Interval::one();

template <class F>
void for_pairs(const std::vector<Interval>& g, F&& f) {
  for (const auto& x : g) {
    for (const auto& y : g) f(x, y);
  }
}

template <class F>
void for_triples(const std::vector<Interval>& g, F&& f) {
  for (const auto& x : g) {
    for (const auto& y : g) {
      for (const auto& z : g) f(x, y, z);
    }
  }
}

void preorder_laws(const std::vector<Interval>& g, std::vector<LawResult>& out) {
  for (const Ordering o : {Ordering::TruthPreorder, Ordering::KnowledgePreorder}) {
    const std::string tag = to_string(o);
    Law refl(tag + " reflexive");
    for (const auto& x : g) {
      refl.check(compare(o, x, x) == Verdict::Equal, [&] { return "x=" + show(x); });
    }
    out.push_back(refl.done());

    Law total(tag + " total");
    for_pairs(g, [&](const Interval& x, const Interval& y) {
      total.check(compare(o, x, y) != Verdict::Incomparable, [&] { return show(x, y); });
    });
    out.push_back(total.done());

    Law trans(tag + " transitive");
    for_triples(g, [&](const Interval& x, const Interval& y, const Interval& z) {
      if (holds_leq(compare(o, x, y)) && holds_leq(compare(o, y, z))) {
        trans.check(holds_leq(compare(o, x, z)), [&] { return show(x, y, z); });
      }
    });
    out.push_back(trans.done());
  }

  Law implication("t implies tp");
  for_pairs(g, [&](const Interval& x, const Interval& y) {
    if (holds_leq(cmp_t_bilattice(x, y))) implication.check(tp_leq(x, y), [&] { return show(x, y); });
  });
  out.push_back(implication.done());
}

void de_morgan_laws(const std::vector<Interval>& g, std::vector<LawResult>& out) {
  struct Triplet {
    const char* name;
    Op t;
    Op s;
  };
  for (const Triplet& tr : {Triplet{"de morgan tminp/sminp/neg", t_min_p, s_min_p},
                            Triplet{"de morgan tpr/spr/neg", t_pr, s_pr}}) {
    Law law(tr.name);
    for_pairs(g, [&](const Interval& x, const Interval& y) {
      const Interval nx = negate_standard(x);
      const Interval ny = negate_standard(y);
      law.check(same(tr.t(x, y), negate_standard(tr.s(nx, ny))) &&
                    same(tr.s(x, y), negate_standard(tr.t(nx, ny))),
                [&] { return show(x, y); });
    });
    out.push_back(law.done());
  }

  Law product("tpr >=tp tppr");
  for_pairs(g, [&](const Interval& x, const Interval& y) {
    product.check(t_pr(x, y).midpoint() >= t_ppr(x, y).midpoint() - kEpsilon,
                  [&] { return show(x, y); });
  });
  out.push_back(product.done());
}

void negator_laws(const std::vector<Interval>& g, std::vector<LawResult>& out) {
  struct Named {
    const char* name;
    std::function<Interval(const Interval&)> n;
    bool check_decreasing;
  };
  const UnitNegator one_minus = [](double a) { return 1.0 - a; };
  const UnitNegator sugeno = [](double a) { return (1.0 - a) / (1.0 + a); };
  // The lifted form of a non-linear negator is not tp-decreasing: nested
  // intervals with equal midpoints come apart under it, e.g.
  // [0.05,0.05] and [0,0.1] for (1-a)/(1+a). Only its boundary and
  // involution laws are checked.
  const std::vector<Named> negators = {
      {"neg", negate_standard, true},
      {"lifted 1-a", [one_minus](const Interval& x) { return negate_lifted(one_minus, x); }, true},
      {"lifted (1-a)/(1+a)", [sugeno](const Interval& x) { return negate_lifted(sugeno, x); }, false},
  };
  for (const auto& [name, n, check_decreasing] : negators) {
    Law law(std::string("negator ") + name + " boundary/involution");
    law.check(same(n(kZero), kOne) && same(n(kOne), kZero), [] { return std::string("boundary"); });
    for (const auto& x : g) {
      law.check(same(n(n(x)), x), [&] { return "involution x=" + show(x); });
    }
    out.push_back(law.done());
    if (!check_decreasing) continue;

    Law dec(std::string("negator ") + name + " tp-decreasing");
    for_pairs(g, [&](const Interval& x, const Interval& y) {
      if (tp_leq(x, y)) dec.check(tp_leq(n(y), n(x)), [&] { return show(x, y); });
    });
    out.push_back(dec.done());
  }

  Law n1("negator n1 on L4");
  const double l4[] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  const auto g4 = intervals_over(l4);
  n1.check(negator_n1(kZero) == kOne && negator_n1(kOne) == kZero,
           [] { return std::string("boundary"); });
  for (const auto& x : g4) {
    n1.check(negator_n1(negator_n1(x)) == x, [&] { return "involution x=" + show(x); });
  }
  for (const auto& x : g4) {
    for (const auto& y : g4) {
      if (tp_leq(x, y)) {
        n1.check(tp_leq(negator_n1(y), negator_n1(x)), [&] { return "decreasing " + show(x, y); });
      }
    }
  }
  out.push_back(n1.done());
}

void connective_laws(const std::vector<Interval>& g, std::vector<LawResult>& out) {
  const NamedOp tnorms[] = {
      {"tminp", t_min_p}, {"tmin", t_min_bilattice}, {"tpr", t_pr}, {"tppr", t_ppr}};
  const NamedOp tconorms[] = {{"sminp", s_min_p}, {"smax", s_max_bilattice}, {"spr", s_pr}};

  for (const auto& [name, t] : tnorms) {
    Law law(std::string("t-norm boundary ") + name);
    law.check(same(t(kZero, kZero), kZero) && same(t(kZero, kOne), kZero) &&
                  same(t(kOne, kZero), kZero) && same(t(kOne, kOne), kOne),
              [] { return std::string("corners"); });
    for (const auto& x : g) {
      law.check(same(t(x, kOne), x) && same(t(kOne, x), x) && same(t(x, kZero), kZero),
                [&] { return "x=" + show(x); });
    }
    for_pairs(g, [&](const Interval& x, const Interval& y) {
      law.check(same(t(x, y), t(y, x)), [&] { return "commutativity " + show(x, y); });
    });
    out.push_back(law.done());
  }
  for (const auto& [name, s] : tconorms) {
    Law law(std::string("t-conorm boundary ") + name);
    law.check(same(s(kZero, kZero), kZero) && same(s(kZero, kOne), kOne) &&
                  same(s(kOne, kZero), kOne) && same(s(kOne, kOne), kOne),
              [] { return std::string("corners"); });
    for (const auto& x : g) {
      law.check(same(s(x, kZero), x) && same(s(kZero, x), x) && same(s(x, kOne), kOne),
                [&] { return "x=" + show(x); });
    }
    for_pairs(g, [&](const Interval& x, const Interval& y) {
      law.check(same(s(x, y), s(y, x)), [&] { return "commutativity " + show(x, y); });
    });
    out.push_back(law.done());
  }

  for (const auto& [name, op] : {NamedOp{"tminp", t_min_p}, NamedOp{"sminp", s_min_p},
                                 NamedOp{"tpr", t_pr}, NamedOp{"spr", s_pr}}) {
    Law law(std::string("associative ") + name);
    for_triples(g, [&](const Interval& x, const Interval& y, const Interval& z) {
      law.check(same(op(op(x, y), z), op(x, op(y, z))), [&] { return show(x, y, z); });
    });
    out.push_back(law.done());
  }

  for (const auto& [name, op] : {NamedOp{"tminp", t_min_p}, NamedOp{"sminp", s_min_p}}) {
    Law law(std::string("tp-increasing ") + name);
    for_triples(g, [&](const Interval& x, const Interval& x2, const Interval& y) {
      if (tp_leq(x, x2)) {
        law.check(tp_leq(op(x, y), op(x2, y)), [&] { return show(x, x2, y); });
      }
    });
    out.push_back(law.done());
  }

  Law selection("tminp selects an argument");
  for_pairs(g, [&](const Interval& x, const Interval& y) {
    const Interval r = t_min_p(x, y);
    const Interval s = s_min_p(x, y);
    selection.check((r == x || r == y) && (s == x || s == y), [&] { return show(x, y); });
  });
  out.push_back(selection.done());
}

void implicator_laws(std::vector<LawResult>& out) {
  using Impl = std::function<Interval(const Interval&, const Interval&)>;
  const std::pair<const char*, Impl> implicators[] = {
      {"simp", [](const Interval& x, const Interval& y) {
         return s_implicator(s_pr, negate_standard, x, y);
       }},
      {"imin", [](const Interval& x, const Interval& y) { return r_implicator_min(x, y).representative(); }},
      {"ipr", [](const Interval& x, const Interval& y) { return r_implicator_pr(x, y).representative(); }},
  };
  for (const auto& [name, imp] : implicators) {
    Law law(std::string("implicator boundary ") + name);
    law.check(same(imp(kZero, kZero), kOne), [] { return std::string("I(0,0)"); });
    law.check(same(imp(kZero, kOne), kOne), [] { return std::string("I(0,1)"); });
    law.check(same(imp(kOne, kOne), kOne), [] { return std::string("I(1,1)"); });
    law.check(same(imp(kOne, kZero), kZero), [] { return std::string("I(1,0)"); });
    out.push_back(law.done());
  }
}

void semantic_laws(const std::vector<Interval>& g, std::vector<LawResult>& out) {
  Law stochastic("tp agrees with stochastic order");
  for_pairs(g, [&](const Interval& x, const Interval& y) {
    stochastic.check(verify_theorem1(x, y), [&] { return show(x, y); });
  });
  out.push_back(stochastic.done());

  Law mset("m-set widest member bounds");
  for (const auto& x : g) {
    const MSet m = m_set_of(x.midpoint());
    const Interval w = m.widest();
    mset.check(m.contains(x) && m.contains(w) && m.contains(m.canonical()) &&
                   w.lo() <= x.lo() + kEpsilon && x.hi() <= w.hi() + kEpsilon,
               [&] { return "x=" + show(x); });
  }
  out.push_back(mset.done());
}

}  // namespace

std::vector<LawResult> run_law_suite(double step) {
  const auto g = interval_grid(step);
  std::vector<LawResult> out;
  preorder_laws(g, out);
  de_morgan_laws(g, out);
  negator_laws(g, out);
  connective_laws(g, out);
  implicator_laws(out);
  semantic_laws(g, out);
  return out;
}

}  // namespace ptri
