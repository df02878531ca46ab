#include "primeterm/fhat.hpp"

#include <array>

#include "primeterm/errors.hpp"
#include "primeterm/mterm.hpp"
#include "primeterm/relations.hpp"

namespace primeterm {

namespace {

using EP = ExpoPoly;

EP v(int i) { return ExpoPoly::variable(i); }
EP k(long c) { return ExpoPoly::constant(Bigint(c)); }
EP sq(const EP& p) { return p * p; }
EP p2of(const EP& e) { return ep_pow2_of(e); }

// ---- blocks of the published 42-variable equation, ported verbatim ----
// These intentionally differ from the registry builders where the reference
// listing does; see the header note.

EP pub_div(const EP& x, const EP& y, int b, const EP& z) {
  // Second square closes against the quotient z, not the divisor.
  return sq(x - y * z - v(b + 1)) + sq(v(b + 1) + v(b + 2) + k(1) - z);
}

EP pub_mod(const EP& x, const EP& y, int b, const EP& z) {
  return sq(x - y * v(b + 1) - z) + sq(z + v(b + 2) + k(1) - y);
}

EP pub_divides(const EP& x, int b, const EP& y) { return sq(x - y * v(b + 1)); }

EP pub_notdivides(const EP& x, int b, const EP& y) {
  return sq(x - y * v(b + 1) - v(b + 2) - k(1)) +
         sq(v(b + 2) + v(b + 3) + k(2) - y);
}

EP pub_nu(const EP& x, int b, const EP& z) {
  // Divisibility first, then indivisibility (the registry order is swapped).
  return pub_divides(x, b, p2of(z)) +
         pub_notdivides(x, b + 1, p2of(z + k(1)));
}

EP pub_binom7(const EP& x, const EP& y, int b, const EP& z) {
  EP y1 = v(b + 1), y2 = v(b + 2), y3 = v(b + 3);
  EP p = sq(y1 - (k(2) * x * x * x + k(8) * x * x + k(2) * x * y + k(12) * x +
                  k(4) * y + k(8)));
  p += sq(y2 - (k(2) * x * x + k(8) * x + k(8)));
  p += pub_div(p2of(y1), p2of(y2) - p2of(k(2) * x + k(4)) - k(1), b + 3, y3);
  p += pub_mod(y3, p2of(k(2) * x + k(4)), b + 5, z);
  return p;
}

EP pub_fact(const EP& x, int b, const EP& z) {
  EP y1 = v(b + 1), y2 = v(b + 2), y3 = v(b + 3), y4 = v(b + 4);
  EP p = sq(y1 - x * x);
  p += sq(y2 - p2of(k(3) * x));  // base grows with the input, not with x^2
  p += sq(y3 - x * y1);
  p += pub_binom7(y2, x, b + 4, y4);
  p += pub_div(p2of(k(3) * y3), y4, b + 11, z);
  return p;
}

EP pub_hw(const EP& x, int b, const EP& z) {
  EP y1 = v(b + 1);
  EP p = pub_binom7(k(2) * x, x, b + 1, y1);
  p += pub_nu(y1, b + 8, z);
  return p;
}

EP pub_m4nine(int i1, int i2, int i3, const EP& f4, int b, const EP& z) {
  auto l = [&](std::uint64_t a3, std::uint64_t a2, std::uint64_t a1,
               std::uint64_t c) {
    LinForm f = LinForm::constant(c);
    f += LinForm::var(i1, a1);
    f += LinForm::var(i2, a2);
    f += LinForm::var(i3, a3);
    return f;
  };
  const EP f1 = v(i1);
  const EP pu = ep_pow2(l(0, 0, 4, 5));
  const EP q1 = ep_pow2(l(0, 0, 8, 10));
  const EP q2 = ep_pow2(l(0, 32, 48, 10));
  const EP q1t = q2;
  // Published powers: q2t carries four extra factors of q2 relative to
  // q2^t, and the degree-4 block below drops the leading progression term.
  const EP q2t = ep_pow2(l(128, 352, 280, 50));
  const EP q1t1 = ep_pow2(l(0, 32, 8, 0));
  const EP q2t1 = ep_pow2(l(128, 192, 40, 0));

  EP q11 = v(b + 1), q21 = v(b + 2), g01 = v(b + 3), g21 = v(b + 4),
     g41 = v(b + 5), g02 = v(b + 6), g12 = v(b + 7), g22 = v(b + 8),
     cc = v(b + 9);

  const EP t1 = k(4) * f1;
  const EP t1_2 = t1 * t1, t1_3 = t1 * t1 * t1, t1_4 = t1 * t1 * t1 * t1;
  const EP mid = k(2) * t1_2 + k(2) * t1 - k(1);
  const EP h = k(1) - pu;
  const EP four_f1 = k(4) * f1;

  const EP g411 =
      k(-4) * t1_4 - k(12) * t1_3 - k(6) * t1_2 + k(12) * t1 + k(11);
  const EP g412 =
      k(6) * t1_4 + k(12) * t1_3 - k(6) * t1_2 - k(12) * t1 + k(11);
  const EP g413 =
      k(-4) * t1_4 - k(4) * t1_3 + k(6) * t1_2 - k(4) * t1 + k(1);
  const EP g414 = f4 * f4 * f4 * f4 * q1t1 + t1_4 * q1t1 - q1 * q1 * q1 -
                  k(11) * q1 * q1 - k(11) * q1 + k(3);

  EP p = sq(z - (cc + h * g41 * g02 - k(2) * h * g21 * g02 -
                 k(2) * four_f1 * h * g21 * g12 +
                 four_f1 * four_f1 * h * g01 * g22 +
                 k(2) * four_f1 * h * g01 * g21));
  p += sq(cc * (pu + k(1)) - pu * (q2t - k(1)));
  p += sq(q11 - q1 + k(1));
  p += sq(q21 - q2 + k(1));
  p += sq(g01 * q11 - q21);
  p += sq(g02 * q21 - (q2t - k(1)));
  p += sq(g12 * q21 * q21 - q2 * (t1 * q2t - f4 * q2t1));
  p += sq(g21 * q11 * q11 * q11 -
          q1 * (t1_2 * q1t1 * q1 * q1 - mid * q2 + f4 * f4 * q1t1 - q1 - k(1)));
  p += sq(g22 * q21 * q21 * q21 -
          q2 * (t1_2 * q2t1 * q2 * q2 - mid * q2t + f4 * f4 * q2t1 - q2 - k(1)));
  p += sq(g41 * q11 * q11 * q11 * q11 * q11 -
          q1 * (q1t * g411 + q1t1 * q1 * q1 * g412 + q1t1 * q1 * q1 * q1 * g413 +
                g414));
  return p;
}

}  // namespace

std::vector<ExpoPoly> fhat_blocks() {
  // Variable layout: a=x1 f1=x2 f2=x3 f3=x4 f4=x5 m=x6 b=x7 d=x8, then the
  // quantified blocks x9..x21 (factorial), x22..x30 (split M), x31..x42
  // (Hamming weight).
  const EP a = v(1), f1 = v(2), f2 = v(3), f3 = v(4), f4 = v(5), m = v(6),
           bb = v(7), d = v(8);
  std::vector<ExpoPoly> blocks;
  blocks.push_back(pub_fact(a, 8, f1));
  blocks.push_back(sq(f2 - f1 * f1));
  blocks.push_back(sq(f3 - f1 * f2));
  blocks.push_back(sq(f4 - k(4) * f1 - k(1)));
  blocks.push_back(pub_m4nine(2, 3, 4, f4, 21, m));
  blocks.push_back(pub_hw(m, 30, bb));
  // Final inequality square; the published multiplier is f1 + 5.
  blocks.push_back(
      sq(bb + (f1 + k(5)) * (k(0) - f4 * f4 + d -
                             ExpoPoly::pow2(LinForm::param_n(1)))));
  return blocks;
}

ExpoPoly build_f(FEquation which) {
  if (which == FEquation::Fhat42) {
    EP f;
    for (const auto& b : fhat_blocks()) f += b;
    return f;
  }

  // 32-variable form: registry relations, single-square M over the normal
  // form, multiplier 4 f1 + 5 and window 4 f1 + 1 substituted directly.
  const EP a = v(1), f1 = v(2), f2 = v(3), f3 = v(4), m = v(5), bb = v(6),
           d = v(7);
  EP f = build_relation(RelId::Factorial, std::array<EP, 1>{a}, 7, f1);
  f += sq(f2 - f1 * f1);
  f += sq(f3 - f1 * f2);
  f += build_relation(RelId::M4Zero, std::array<EP, 3>{f1, f2, f3}, 20, m);
  f += build_relation(RelId::HammingWeight, std::array<EP, 1>{m}, 20, bb);
  const EP f4 = k(4) * f1 + k(1);
  f += sq(bb + (k(4) * f1 + k(5)) *
                   (k(0) - f4 * f4 + d - ExpoPoly::pow2(LinForm::param_n(1))));
  return f;
}

// ---------------------------------------------------------------------------
// Normal form of M

MNormalForm m_normal_form(int f1i, int f2i, int f3i) {
  auto l = [&](std::uint64_t a3, std::uint64_t a2, std::uint64_t a1,
               std::uint64_t c) {
    LinForm f = LinForm::constant(c);
    f += LinForm::var(f1i, a1);
    f += LinForm::var(f2i, a2);
    f += LinForm::var(f3i, a3);
    return f;
  };
  const EP f1 = v(f1i);
  const EP one = k(1);
  const EP pu = ep_pow2(l(0, 0, 4, 5));           // 2^u
  const EP q1 = ep_pow2(l(0, 0, 8, 10));          // 2^(2u)
  const EP q2 = ep_pow2(l(0, 32, 48, 10));        // q1^t
  const EP q2t = ep_pow2(l(128, 224, 88, 10));    // q2^t
  const EP q1t1 = ep_pow2(l(0, 32, 40, 0));       // q1^(t-1)
  const EP q2t1 = ep_pow2(l(128, 192, 40, 0));    // q2^(t-1)

  const EP t1 = k(4) * f1;
  const EP tt = k(4) * f1 + one;
  const EP t1_2 = t1 * t1, t1_3 = t1 * t1 * t1, t1_4 = t1 * t1 * t1 * t1;
  const EP mid = k(2) * t1_2 + k(2) * t1 - one;

  // Closed-form numerators of the geometric progressions involved, without
  // their (q-1)-power denominators.
  const EP n1_q2 = t1 * q2t - tt * q2t1 + one;  // G1(q2, t) core
  const EP n2_q1 =
      t1_2 * q1t1 * q1 * q1 - mid * q2 + tt * tt * q1t1 - q1 - one;
  const EP n2_q2 =
      t1_2 * q2t1 * q2 * q2 - mid * q2t + tt * tt * q2t1 - q2 - one;
  const EP c1 = k(-4) * t1_4 - k(12) * t1_3 - k(6) * t1_2 + k(12) * t1 + k(11);
  const EP c2 = k(6) * t1_4 + k(12) * t1_3 - k(6) * t1_2 - k(12) * t1 + k(11);
  const EP c3 = k(-4) * t1_4 - k(4) * t1_3 + k(6) * t1_2 - k(4) * t1 + one;
  const EP n4_q1 = t1_4 * q1t1 * q1 * q1 * q1 * q1 + c1 * q2 +
                   c2 * q1t1 * q1 * q1 + c3 * q1t1 * q1 * q1 * q1 +
                   tt * tt * tt * tt * q1t1 - q1 * q1 * q1 - k(11) * q1 * q1 -
                   k(11) * q1 - one;

  const EP um1 = pu - one;        // 2^u - 1
  const EP up1 = pu + one;        // 2^u + 1
  const EP q1m1 = q1 - one;
  const EP q2m1 = q2 - one;
  const EP q1m1_2 = q1m1 * q1m1;
  const EP q1m1_4 = q1m1_2 * q1m1_2;
  const EP q2m1_2 = q2m1 * q2m1;

  // Contribution numerators over their own denominators:
  //   block constant: pu (q2t - 1)                 / (2^u + 1)
  //   degree (4,0):  -(2^u-1) q1 N4 (q2t - 1)      / (q1-1)^5 (q2-1)
  //   degree (2,0):  +2 (2^u-1) q1 N2(q1) (q2t-1)  / (q1-1)^3 (q2-1)
  //   degree (2,1):  +8 f1 (2^u-1) q1 N2(q1) q2 N1 / (q1-1)^3 (q2-1)^2
  //   degree (0,2):  -16 f1^2 (2^u-1) (q2-1) q2 N2(q2) / (q1-1) (q2-1)^3
  //   degree (0,1):  -8 f1 (2^u-1) (q2-1) q2 N1    / (q1-1) (q2-1)^2
  // over the common denominator (2^u + 1)(q1-1)^5 (q2-1)^3.
  EP L = pu * (q2t - one) * q1m1_4 * q1m1 * q2m1 * q2m1_2;
  L -= um1 * q1 * n4_q1 * (q2t - one) * up1 * q2m1_2;
  L += k(2) * um1 * q1 * n2_q1 * (q2t - one) * up1 * q1m1_2 * q2m1_2;
  L += k(8) * f1 * um1 * q1 * n2_q1 * q2 * n1_q2 * up1 * q1m1_2 * q2m1;
  L -= k(16) * f1 * f1 * um1 * q2m1 * q2 * n2_q2 * up1 * q1m1_4;
  L -= k(8) * f1 * um1 * q2m1 * q2m1 * q2 * n1_q2 * up1 * q1m1_4;

  EP D = up1 * q1m1_4 * q1m1 * q2m1 * q2m1_2;
  return MNormalForm{std::move(L), std::move(D)};
}

bool normalized_m_check(std::uint64_t n, const EvalConfig& cfg) {
  MNormalForm nf = m_normal_form(1, 2, 3);
  const Bigint nn(n);
  std::vector<Bigint> vals = {nn, nn * nn, nn * nn * nn};
  Bigint left = build_m(Bigint(4) * nn, MVariant::Assembled, cfg) *
                nf.denominator.evaluate(vals, Bigint(0), cfg.max_bits);
  Bigint right = nf.numerator.evaluate(vals, Bigint(0), cfg.max_bits);
  return left == right;
}

// ---------------------------------------------------------------------------
// Solution-count plan

HypercubePlan fhat_plan() {
  HypercubePlan plan;
  plan.k = 42;
  {
    TermPtr n = t_var("n");
    TermPtr n4 = t_mul(t_mul(n, n), t_mul(n, n));
    plan.t_expr = t_pow2(t_pow2(t_pow2(t_add(t_mul(t_const(2), n4), t_const(16)))));
    // u references the same tower through t.
    plan.u_expr = t_pow2(t_add(
        t_pow2(t_add(t_mul(t_const(9), plan.t_expr), t_const(8))), t_const(9)));
  }
  const ExpoPoly f = build_f(FEquation::Fhat42);
  bool have_c = false;
  for (const auto& [key, c0] : f.terms()) {
    PlanDescriptor d;
    d.c0 = c0;
    d.e_const = key.exp2.c_const;
    d.e_n = key.exp2.c_n;
    if (key.degrees.empty() && key.exp2.vars.empty() && key.exp2.c_n == 0 &&
        key.exp2.c_const == 0) {
      // The lone integer constant becomes the block-constant contribution.
      d.is_c = true;
      have_c = true;
    } else {
      d.g_degrees.assign(42, 0);
      d.base_shift.assign(42, 0);
      for (const auto& [var, deg] : key.degrees)
        d.g_degrees[static_cast<std::size_t>(var - 1)] = deg;
      for (const auto& [var, e2] : key.exp2.vars)
        d.base_shift[static_cast<std::size_t>(var - 1)] = e2;
    }
    plan.descriptors.push_back(std::move(d));
  }
  if (!have_c) throw Error("expansion lost its constant term");
  return plan;
}

}  // namespace primeterm
