#include "primeterm/relations.hpp"

#include <set>

#include "primeterm/errors.hpp"
#include "primeterm/fhat.hpp"
#include "primeterm/geom.hpp"
#include "primeterm/mterm.hpp"
#include "primeterm/numtheory.hpp"

namespace primeterm {

namespace {

using EP = ExpoPoly;

EP v(int i) { return ExpoPoly::variable(i); }
EP k(long c) { return ExpoPoly::constant(Bigint(c)); }
EP sq(const EP& p) { return p * p; }
EP p2of(const EP& e) { return ep_pow2_of(e); }

// Input slots must be plain variables for the relations that use them inside
// exponents or as normal-form parameters.
int var_index_of(const EP& p) {
  if (p.size() != 1) throw DomainError("slot must be a plain variable");
  const auto& [key, c] = *p.terms().begin();
  if (!(c == Bigint(1)) || !key.exp2.zero() || key.degrees.size() != 1 ||
      key.degrees[0].second != 1)
    throw DomainError("slot must be a plain variable");
  return key.degrees[0].first;
}

// ---- symbolic builders (quantified variables at base+1, base+2, ...) ----

EP build_div(const EP& x, const EP& y, int b, const EP& z) {
  return sq(x - y * z - v(b + 1)) + sq(v(b + 1) + v(b + 2) + k(1) - y);
}

EP build_mod(const EP& x, const EP& y, int b, const EP& z) {
  return sq(x - y * v(b + 1) - z) + sq(z + v(b + 2) + k(1) - y);
}

EP build_divides(const EP& x, int b, const EP& y) { return sq(x - y * v(b + 1)); }

EP build_notdivides(const EP& x, int b, const EP& y) {
  return sq(x - y * v(b + 1) - v(b + 2) - k(1)) +
         sq(v(b + 2) + v(b + 3) + k(2) - y);
}

EP build_nu(const EP& x, int b, const EP& z) {
  return build_notdivides(x, b, p2of(z + k(1))) +
         build_divides(x, b + 3, p2of(z));
}

EP build_exp(const EP& x, const EP& y, int b, const EP& z) {
  EP y1 = v(b + 1), y2 = v(b + 2);
  return sq(y1 - x * y - x - k(1)) + sq(y2 - y1 * y) +
         build_mod(p2of(y2), p2of(y1) - x, b + 2, z);
}

EP build_binom12(const EP& x, const EP& y, int b, const EP& z) {
  EP y1 = v(b + 1), y2 = v(b + 2), y3 = v(b + 3), y4 = v(b + 4);
  EP p = sq(k(1) + p2of(x) - y1);
  p += build_exp(y1, x, b + 4, y2);
  p += sq(y3 - x * y);
  p += build_div(y2, p2of(y3), b + 8, y4);
  p += build_mod(y4, p2of(x), b + 10, z);
  return p;
}

EP build_binom7(const EP& x, const EP& y, int b, const EP& z) {
  EP y1 = v(b + 1), y2 = v(b + 2), y3 = v(b + 3);
  EP p = sq(y1 - (k(2) * x * x * x + k(8) * x * x + k(2) * x * y + k(12) * x +
                  k(4) * y + k(8)));
  p += sq(y2 - (k(2) * x * x + k(8) * x + k(8)));
  p += build_div(p2of(y1), p2of(y2) - p2of(k(2) * x + k(4)) - k(1), b + 3, y3);
  p += build_mod(y3, p2of(k(2) * x + k(4)), b + 5, z);
  return p;
}

EP build_fact(const EP& x, int b, const EP& z) {
  EP y1 = v(b + 1), y2 = v(b + 2), y3 = v(b + 3), y4 = v(b + 4);
  EP p = sq(y1 - x * x);
  p += sq(y2 - p2of(k(3) * y1));
  p += sq(y3 - x * y1);
  p += build_binom7(y2, x, b + 4, y4);
  p += build_div(p2of(k(3) * y3), y4, b + 11, z);
  return p;
}

EP build_hw(const EP& x, int b, const EP& z) {
  EP y1 = v(b + 1);
  EP p = build_binom7(k(2) * x, x, b + 1, y1);
  p += build_nu(y1, b + 8, z);
  return p;
}

EP build_m4zero(const EP& f1, const EP& f2, const EP& f3, const EP& z) {
  MNormalForm nf =
      m_normal_form(var_index_of(f1), var_index_of(f2), var_index_of(f3));
  return sq(z * nf.denominator - nf.numerator);
}

// The split form pins the four geometric-progression values, the two
// carry variables and the block constant, then ties the output to their
// signed combination. Inputs must satisfy f2 = f1^2, f3 = f1^3, f4 = 4f1+1
// so all exponents stay affine.
EP build_m4nine(const EP& f1, const EP& f2, const EP& f3, const EP& f4, int b,
                const EP& z) {
  const int i1 = var_index_of(f1), i2 = var_index_of(f2),
            i3 = var_index_of(f3);
  auto l = [&](std::uint64_t a3, std::uint64_t a2, std::uint64_t a1,
               std::uint64_t c) {
    LinForm f = LinForm::constant(c);
    f += LinForm::var(i1, a1);
    f += LinForm::var(i2, a2);
    f += LinForm::var(i3, a3);
    return f;
  };
  const EP pu = ep_pow2(l(0, 0, 4, 5));      // 2^u,      u = 4 f1 + 5
  const EP q1 = ep_pow2(l(0, 0, 8, 10));     // 2^(2u)
  const EP q2 = ep_pow2(l(0, 32, 48, 10));   // q1^t,     t = 4 f1 + 1
  const EP q2t = ep_pow2(l(128, 224, 88, 10));    // q2^t
  const EP q1t1 = ep_pow2(l(0, 32, 40, 0));       // q1^(t-1)
  const EP q2t1 = ep_pow2(l(128, 192, 40, 0));    // q2^(t-1)

  EP q11 = v(b + 1), q21 = v(b + 2), g01 = v(b + 3), g21 = v(b + 4),
     g41 = v(b + 5), g02 = v(b + 6), g12 = v(b + 7), g22 = v(b + 8),
     cc = v(b + 9);

  const EP t1 = k(4) * f1;
  const EP t1_2 = t1 * t1, t1_3 = t1 * t1 * t1, t1_4 = t1 * t1 * t1 * t1;
  const EP mid = k(2) * t1_2 + k(2) * t1 - k(1);
  const EP h = k(1) - pu;
  const EP four_f1 = k(4) * f1;

  EP p = sq(z - (cc + h * g41 * g02 - k(2) * h * g21 * g02 -
                 k(2) * four_f1 * h * g21 * g12 +
                 four_f1 * four_f1 * h * g01 * g22 +
                 k(2) * four_f1 * h * g01 * g12));
  p += sq(cc * (pu + k(1)) - pu * (q2t - k(1)));
  p += sq(q11 - q1 + k(1));
  p += sq(q21 - q2 + k(1));
  p += sq(g01 * q11 - (q2 - k(1)));
  p += sq(g02 * q21 - (q2t - k(1)));
  p += sq(g12 * q21 * q21 - q2 * (t1 * q2t - f4 * q2t1 + k(1)));
  p += sq(g21 * q11 * q11 * q11 -
          q1 * (t1_2 * q1t1 * q1 * q1 - mid * q2 + f4 * f4 * q1t1 - q1 - k(1)));
  p += sq(g22 * q21 * q21 * q21 -
          q2 * (t1_2 * q2t1 * q2 * q2 - mid * q2t + f4 * f4 * q2t1 - q2 - k(1)));
  const EP c1 = k(-4) * t1_4 - k(12) * t1_3 - k(6) * t1_2 + k(12) * t1 + k(11);
  const EP c2 = k(6) * t1_4 + k(12) * t1_3 - k(6) * t1_2 - k(12) * t1 + k(11);
  const EP c3 = k(-4) * t1_4 - k(4) * t1_3 + k(6) * t1_2 - k(4) * t1 + k(1);
  p += sq(g41 * q11 * q11 * q11 * q11 * q11 -
          q1 * (t1_4 * q1t1 * q1 * q1 * q1 * q1 + c1 * q2 +
                c2 * q1t1 * q1 * q1 + c3 * q1t1 * q1 * q1 * q1 +
                f4 * f4 * f4 * f4 * q1t1 - q1 * q1 * q1 - k(11) * q1 * q1 -
                k(11) * q1 - k(1)));
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<RelationInfo>& relation_registry() {
  static const std::vector<RelationInfo> table = {
      {RelId::Div, "div", 2, 2, true},
      {RelId::Mod, "mod", 2, 2, true},
      {RelId::Divides, "divides", 2, 1, false},
      {RelId::NotDivides, "not-divides", 2, 3, false},
      {RelId::Nu2, "nu2", 1, 4, true},
      {RelId::Exp, "exp", 2, 4, true},
      {RelId::Binom12, "binom12", 2, 12, true},
      {RelId::Binom7, "binom7", 2, 7, true},
      {RelId::Factorial, "factorial", 1, 13, true},
      {RelId::HammingWeight, "hamming-weight", 1, 12, true},
      {RelId::M4Zero, "m4-normal", 3, 0, true},
      {RelId::M4Nine, "m4-split", 4, 9, true},
  };
  return table;
}

const RelationInfo& relation_info(RelId id) {
  for (const auto& r : relation_registry()) {
    if (r.id == id) return r;
  }
  throw Error("unknown relation");
}

ExpoPoly build_relation(RelId id, std::span<const ExpoPoly> inputs, int base,
                        const ExpoPoly& output) {
  const RelationInfo& info = relation_info(id);
  if (static_cast<int>(inputs.size()) != info.input_arity)
    throw DomainError(std::string(info.name) + ": wrong input arity");

  // The quantified block must not touch any slot variable.
  std::set<int> used;
  auto collect = [&used](const ExpoPoly& p) {
    for (const auto& [key, c] : p.terms()) {
      for (const auto& [var, d] : key.degrees) used.insert(var);
      for (const auto& [var, e] : key.exp2.vars) used.insert(var);
    }
  };
  for (const auto& in : inputs) collect(in);
  if (info.has_output) collect(output);
  for (int q = base + 1; q <= base + info.quantified; ++q) {
    if (used.count(q))
      throw SlotCollision(std::string(info.name) + ": quantified variable x" +
                          std::to_string(q) + " collides with a slot");
  }

  switch (id) {
    case RelId::Div:
      return build_div(inputs[0], inputs[1], base, output);
    case RelId::Mod:
      return build_mod(inputs[0], inputs[1], base, output);
    case RelId::Divides:
      return build_divides(inputs[0], base, inputs[1]);
    case RelId::NotDivides:
      return build_notdivides(inputs[0], base, inputs[1]);
    case RelId::Nu2:
      return build_nu(inputs[0], base, output);
    case RelId::Exp:
      return build_exp(inputs[0], inputs[1], base, output);
    case RelId::Binom12:
      return build_binom12(inputs[0], inputs[1], base, output);
    case RelId::Binom7:
      return build_binom7(inputs[0], inputs[1], base, output);
    case RelId::Factorial:
      return build_fact(inputs[0], base, output);
    case RelId::HammingWeight:
      return build_hw(inputs[0], base, output);
    case RelId::M4Zero:
      return build_m4zero(inputs[0], inputs[1], inputs[2], output);
    case RelId::M4Nine:
      return build_m4nine(inputs[0], inputs[1], inputs[2], inputs[3], base,
                          output);
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Witnesses

namespace {

void append(Witness& w, const std::vector<Bigint>& more) {
  for (const auto& b : more) w.quantified.push_back(b);
}

Witness wit_div(const Bigint& x, const Bigint& y) {
  if (y.sign() <= 0) throw NoWitness("floor division needs a positive divisor");
  Bigint q, r;
  fdiv_qr(q, r, x, y);
  return Witness{{r, y - Bigint(1) - r}, q};
}

Witness wit_mod(const Bigint& x, const Bigint& y) {
  if (y.sign() <= 0) throw NoWitness("mod needs a positive divisor");
  Bigint q, r;
  fdiv_qr(q, r, x, y);
  return Witness{{q, y - Bigint(1) - r}, r};
}

Witness wit_divides(const Bigint& x, const Bigint& y) {
  if (y.is_zero()) {
    if (x.is_zero()) return Witness{{Bigint(0)}, {}};
    throw NoWitness("zero divides only zero");
  }
  Bigint q, r;
  fdiv_qr(q, r, x, abs(y));
  if (!r.is_zero()) throw NoWitness("not divisible");
  return Witness{{q}, {}};
}

Witness wit_notdivides(const Bigint& x, const Bigint& y) {
  if (y <= Bigint(1)) throw NoWitness("indivisibility needs divisor >= 2");
  Bigint q, r;
  fdiv_qr(q, r, x, y);
  if (r.is_zero()) throw NoWitness("divisible");
  return Witness{{q, r - Bigint(1), y - Bigint(1) - r}, {}};
}

Witness wit_nu(const Bigint& x, const EvalConfig& cfg) {
  if (x.sign() <= 0) throw NoWitness("nu2 defined for x >= 1");
  const std::uint64_t nu = x.trailing_zeros();
  Witness w;
  Witness nd = wit_notdivides(x, checked_pow2(Bigint(nu + 1), cfg.max_bits));
  Witness dv = wit_divides(x, Bigint::pow2(nu));
  append(w, nd.quantified);
  append(w, dv.quantified);
  w.output = Bigint(nu);
  return w;
}

Witness wit_exp(const Bigint& x, const Bigint& y, const EvalConfig& cfg) {
  if (x.sign() < 0 || y.sign() < 0) throw NoWitness("exp needs x, y >= 0");
  const Bigint y1 = x * y + x + Bigint(1);
  const Bigint y2 = y1 * y;
  Witness inner = wit_mod(checked_pow2(y2, cfg.max_bits),
                          checked_pow2(y1, cfg.max_bits) - x);
  Witness w;
  w.quantified = {y1, y2};
  append(w, inner.quantified);
  w.output = inner.output;
  return w;
}

Witness wit_binom7(const Bigint& x, const Bigint& y, const EvalConfig& cfg) {
  const Bigint y1 = Bigint(2) * x * x * x + Bigint(8) * x * x +
                    Bigint(2) * x * y + Bigint(12) * x + Bigint(4) * y +
                    Bigint(8);
  const Bigint y2 = Bigint(2) * x * x + Bigint(8) * x + Bigint(8);
  const Bigint window = checked_pow2(Bigint(2) * x + Bigint(4), cfg.max_bits);
  const Bigint den = checked_pow2(y2, cfg.max_bits) - window - Bigint(1);
  Witness dv = wit_div(checked_pow2(y1, cfg.max_bits), den);
  Witness md = wit_mod(dv.output, window);
  Witness w;
  w.quantified = {y1, y2, dv.output};
  append(w, dv.quantified);
  append(w, md.quantified);
  w.output = md.output;
  return w;
}

Witness wit_fact(const Bigint& x, const EvalConfig& cfg) {
  const Bigint y1 = x * x;
  const Bigint y2 = checked_pow2(Bigint(3) * y1, cfg.max_bits);
  const Bigint y3 = x * y1;
  Witness bn = wit_binom7(y2, x, cfg);
  Witness dv = wit_div(checked_pow2(Bigint(3) * y3, cfg.max_bits), bn.output);
  Witness w;
  w.quantified = {y1, y2, y3, bn.output};
  append(w, bn.quantified);
  append(w, dv.quantified);
  w.output = dv.output;
  return w;
}

Witness wit_hw(const Bigint& x, const EvalConfig& cfg) {
  Witness bn = wit_binom7(x + x, x, cfg);
  Witness nu = wit_nu(bn.output, cfg);
  Witness w;
  w.quantified = {bn.output};
  append(w, bn.quantified);
  append(w, nu.quantified);
  w.output = nu.output;
  return w;
}

void check_m_inputs(std::span<const Bigint> in) {
  if (!(in[1] == in[0] * in[0]) || !(in[2] == in[0] * in[0] * in[0]))
    throw DomainError("m-relation needs f2 = f1^2 and f3 = f1^3");
  if (in.size() > 3 && !(in[3] == Bigint(4) * in[0] + Bigint(1)))
    throw DomainError("m-relation needs f4 = 4 f1 + 1");
}

Witness wit_m4nine(std::span<const Bigint> in, const EvalConfig& cfg) {
  check_m_inputs(in);
  const Bigint& f1 = in[0];
  const std::uint64_t n = f1.to_u64();
  const std::uint64_t t = 4 * n + 1, u = 4 * n + 5;
  const Bigint q1 = Bigint::pow2(2 * u), q2 = Bigint::pow2(2 * u * t);
  Witness w;
  w.quantified = {
      q1 - Bigint(1),
      q2 - Bigint(1),
      geom_sum(0, q1, t, GeomMethod::Closed, cfg),
      geom_sum(2, q1, t, GeomMethod::Closed, cfg),
      geom_sum(4, q1, t, GeomMethod::Closed, cfg),
      geom_sum(0, q2, t, GeomMethod::Closed, cfg),
      geom_sum(1, q2, t, GeomMethod::Closed, cfg),
      geom_sum(2, q2, t, GeomMethod::Closed, cfg),
      divexact_checked(
          Bigint::pow2(u) *
              (checked_pow(q2, Bigint(t), cfg.max_bits) - Bigint(1)),
          Bigint::pow2(u) + Bigint(1), "C witness"),
  };
  w.output = build_m(Bigint(4) * f1, MVariant::Assembled, cfg);
  return w;
}

}  // namespace

Witness witness(RelId id, std::span<const Bigint> inputs,
                const EvalConfig& cfg) {
  const RelationInfo& info = relation_info(id);
  if (static_cast<int>(inputs.size()) != info.input_arity)
    throw DomainError(std::string(info.name) + ": wrong input arity");
  switch (id) {
    case RelId::Div:
      return wit_div(inputs[0], inputs[1]);
    case RelId::Mod:
      return wit_mod(inputs[0], inputs[1]);
    case RelId::Divides:
      return wit_divides(inputs[0], inputs[1]);
    case RelId::NotDivides:
      return wit_notdivides(inputs[0], inputs[1]);
    case RelId::Nu2:
      return wit_nu(inputs[0], cfg);
    case RelId::Exp:
      return wit_exp(inputs[0], inputs[1], cfg);
    case RelId::Binom12: {
      const Bigint& x = inputs[0];
      const Bigint y1 = checked_pow2(x, cfg.max_bits) + Bigint(1);
      Witness ex = wit_exp(y1, x, cfg);
      const Bigint y2 = ex.output;
      const Bigint y3 = x * inputs[1];
      Witness dv = wit_div(y2, checked_pow2(y3, cfg.max_bits));
      Witness md = wit_mod(dv.output, checked_pow2(x, cfg.max_bits));
      Witness w;
      w.quantified = {y1, y2, y3, dv.output};
      append(w, ex.quantified);
      append(w, dv.quantified);
      append(w, md.quantified);
      w.output = md.output;
      return w;
    }
    case RelId::Binom7:
      return wit_binom7(inputs[0], inputs[1], cfg);
    case RelId::Factorial:
      return wit_fact(inputs[0], cfg);
    case RelId::HammingWeight:
      return wit_hw(inputs[0], cfg);
    case RelId::M4Zero: {
      check_m_inputs(inputs);
      Witness w;
      w.output = build_m(Bigint(4) * inputs[0], MVariant::Assembled, cfg);
      return w;
    }
    case RelId::M4Nine:
      return wit_m4nine(inputs, cfg);
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Bounds

std::vector<Bigint> bounds(RelId id, std::span<const Bigint> inputs,
                           const EvalConfig& cfg) {
  auto P2 = [&](const Bigint& e) { return checked_pow2(e, cfg.max_bits); };
  const Bigint one(1), two(2);
  switch (id) {
    case RelId::Div: {
      const Bigint &x = inputs[0], &y = inputs[1];
      return {y, y, x + one};
    }
    case RelId::Mod: {
      const Bigint &x = inputs[0], &y = inputs[1];
      return {x, y, y};
    }
    case RelId::Divides:
      return {inputs[0] + one};
    case RelId::NotDivides: {
      const Bigint &x = inputs[0], &y = inputs[1];
      return {x, y, y};
    }
    case RelId::Nu2: {
      const Bigint& x = inputs[0];
      return {x, two * x, two * x, x + one, x};
    }
    case RelId::Exp: {
      // Derived the same way as the published ones: each carrier is pinned
      // by an equation, each remainder is below its divisor.
      const Bigint &x = inputs[0], &y = inputs[1];
      const Bigint b1 = x * y + x + two;
      const Bigint b2 = (x * y + x + one) * y + one;
      return {b1, b2, P2(b2), P2(b1) - x, P2(b1) - x};
    }
    case RelId::Binom12: {
      const Bigint &x = inputs[0], &y = inputs[1];
      const Bigint b1 = P2(x) + two;                    // y1 = 1 + 2^x
      const Bigint b2 = P2(x * (x + one)) + one;        // y2 = (1 + 2^x)^x
      const Bigint e1 = b1 * x + b1 + one;              // above y1 x + y1 + 1
      return {b1,
              b2,
              x * y + one,
              b2,
              e1,
              e1 * x + one,
              P2(e1 * x + one),
              P2(e1),
              P2(x * y),
              P2(x * y),
              b2,
              P2(x),
              P2(x)};
    }
    case RelId::Binom7: {
      const Bigint& x = inputs[0];
      const Bigint c3 = Bigint(28) * x * x * x + Bigint(9);
      const Bigint c2 = Bigint(10) * x * x + Bigint(9);
      const Bigint c2e = Bigint(10) * x * x + Bigint(8);
      const Bigint w = Bigint(2) * x + Bigint(4);
      return {c3, c2, P2(c3), P2(c2e), P2(c2e), P2(c3), P2(w), P2(w)};
    }
    case RelId::Factorial: {
      const Bigint& x = inputs[0];
      const Bigint y1 = x * x;
      const Bigint y2 = P2(Bigint(3) * y1);
      const Bigint y3 = x * y1;
      const Bigint b3 = Bigint(28) * y2 * y2 * y2 + Bigint(9);
      const Bigint b2 = Bigint(10) * y2 * y2 + Bigint(9);
      const Bigint b2e = Bigint(10) * y2 * y2 + Bigint(8);
      const Bigint w = Bigint(2) * y2 + Bigint(4);
      return {y1 + one,   P2(Bigint(3) * y1 + one),
              y3 + one,   P2(w),
              b3,         b2,
              P2(b3),     P2(b2e),
              P2(b2e),    P2(b3),
              P2(w),      P2(w),
              P2(w),      P2(Bigint(3) * y3 + one)};
    }
    case RelId::HammingWeight: {
      const Bigint& x = inputs[0];
      const Bigint c3 = Bigint(224) * x * x * x + Bigint(9);
      const Bigint c2 = Bigint(40) * x * x + Bigint(9);
      const Bigint c2e = Bigint(40) * x * x + Bigint(8);
      const Bigint w4 = Bigint(4) * x + Bigint(4);
      const Bigint w5 = Bigint(4) * x + Bigint(5);
      return {P2(w4), c3,     c2,     P2(c3),       P2(c2e),
              P2(c2e), P2(c3), P2(w4), P2(w4),       P2(w5),
              P2(w5),  P2(w4) + one,   x + one};
    }
    case RelId::M4Zero: {
      const Bigint& f = inputs[0];
      return {P2(Bigint(512) * f * f * f + Bigint(576) * f * f +
                 Bigint(216) * f + Bigint(27))};
    }
    case RelId::M4Nine: {
      const Bigint& f = inputs[0];
      const Bigint f2 = f * f, f3 = f * f * f;
      const Bigint t = Bigint(4) * f + one;
      const Bigint eq1 = Bigint(8) * f + Bigint(10);
      const Bigint eq2 = Bigint(32) * f2 + Bigint(48) * f + Bigint(10);
      const Bigint eqt = Bigint(128) * f3 + Bigint(224) * f2 +
                         Bigint(88) * f + Bigint(10);
      return {P2(eq1),
              P2(eq2),
              t * P2(eq2),
              t * t * t * P2(eq2),
              t * t * t * t * t * P2(eq2),
              P2(eqt),
              t * t * P2(eqt),
              t * t * t * P2(eqt),
              P2(Bigint(128) * f3 + Bigint(224) * f2 + Bigint(92) * f +
                 Bigint(15)),
              P2(Bigint(512) * f3 + Bigint(576) * f2 + Bigint(216) * f +
                 Bigint(27))};
    }
  }
  throw Error("unreachable");
}

TermPtr solution_bound_tower() {
  TermPtr n = t_var("n");
  TermPtr inner = t_add(
      t_mul(t_const(2), t_mul(t_mul(n, n), t_mul(n, n))), t_const(16));
  return t_pow2(t_pow2(t_pow2(inner)));
}

}  // namespace primeterm
