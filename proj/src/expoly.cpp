#include "primeterm/expoly.hpp"

#include <algorithm>

#include <json.hpp>

#include "primeterm/errors.hpp"

namespace primeterm {

LinForm LinForm::constant(std::uint64_t c) {
  LinForm f;
  f.c_const = c;
  return f;
}

LinForm LinForm::param_n(std::uint64_t c) {
  LinForm f;
  f.c_n = c;
  return f;
}

LinForm LinForm::var(int index, std::uint64_t c) {
  LinForm f;
  if (c != 0) f.vars[index] = c;
  return f;
}

LinForm& LinForm::operator+=(const LinForm& o) {
  c_const += o.c_const;
  c_n += o.c_n;
  for (const auto& [v, c] : o.vars) {
    auto it = vars.find(v);
    if (it == vars.end()) {
      vars.emplace(v, c);
    } else {
      it->second += c;
    }
  }
  return *this;
}

bool ExpoKeyLess::operator()(const ExpoKey& a, const ExpoKey& b) const {
  if (a.degrees != b.degrees) return a.degrees < b.degrees;
  if (a.exp2.vars != b.exp2.vars) {
    return std::lexicographical_compare(
        a.exp2.vars.begin(), a.exp2.vars.end(), b.exp2.vars.begin(),
        b.exp2.vars.end());
  }
  if (a.exp2.c_n != b.exp2.c_n) return a.exp2.c_n < b.exp2.c_n;
  return a.exp2.c_const < b.exp2.c_const;
}

void ExpoPoly::add_term(const ExpoKey& key, const Bigint& coeff) {
  // Canonical form: keys carry only the symbolic exponent part (variables
  // and n); any integer exponent constant folds into the coefficient, so
  // 3 * 2^(E+5) and 32 * 2^(E+1) of the same symbolic E combine. Emission
  // splits the 2-power back out for display.
  if (coeff.is_zero()) return;
  ExpoKey k = key;
  Bigint c = coeff;
  if (k.exp2.c_const > 0) {
    c <<= k.exp2.c_const;
    k.exp2.c_const = 0;
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpoPoly ExpoPoly::constant(Bigint c) {
  ExpoPoly p;
  p.add_term(ExpoKey{}, c);
  return p;
}

ExpoPoly ExpoPoly::variable(int index) {
  ExpoPoly p;
  p.add_term(ExpoKey{{{index, 1}}, {}}, Bigint(1));
  return p;
}

ExpoPoly ExpoPoly::pow2(LinForm e) {
  ExpoPoly p;
  p.add_term(ExpoKey{{}, std::move(e)}, Bigint(1));
  return p;
}

ExpoPoly ExpoPoly::monomial(Bigint c, LinForm e,
                            std::vector<std::pair<int, unsigned>> degrees) {
  std::sort(degrees.begin(), degrees.end());
  ExpoPoly p;
  p.add_term(ExpoKey{std::move(degrees), std::move(e)}, c);
  return p;
}

ExpoPoly& ExpoPoly::operator+=(const ExpoPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ExpoPoly& ExpoPoly::operator-=(const ExpoPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ExpoPoly operator-(const ExpoPoly& a) {
  ExpoPoly r;
  for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
  return r;
}

ExpoPoly operator*(const ExpoPoly& a, const ExpoPoly& b) {
  ExpoPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      ExpoKey k;
      k.exp2 = ka.exp2;
      k.exp2 += kb.exp2;
      // Merge sorted degree lists.
      k.degrees.reserve(ka.degrees.size() + kb.degrees.size());
      auto ia = ka.degrees.begin(), ib = kb.degrees.begin();
      while (ia != ka.degrees.end() || ib != kb.degrees.end()) {
        if (ib == kb.degrees.end() ||
            (ia != ka.degrees.end() && ia->first < ib->first)) {
          k.degrees.push_back(*ia++);
        } else if (ia == ka.degrees.end() || ib->first < ia->first) {
          k.degrees.push_back(*ib++);
        } else {
          k.degrees.emplace_back(ia->first, ia->second + ib->second);
          ++ia;
          ++ib;
        }
      }
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

ExpoPoly ExpoPoly::relabel(const std::map<int, int>& mapping) const {
  ExpoPoly r;
  for (const auto& [k, c] : terms_) {
    ExpoKey nk;
    std::map<int, unsigned> degs;
    for (const auto& [v, d] : k.degrees) {
      auto it = mapping.find(v);
      degs[it == mapping.end() ? v : it->second] += d;
    }
    nk.degrees.assign(degs.begin(), degs.end());
    nk.exp2.c_const = k.exp2.c_const;
    nk.exp2.c_n = k.exp2.c_n;
    for (const auto& [v, e] : k.exp2.vars) {
      auto it = mapping.find(v);
      nk.exp2.vars[it == mapping.end() ? v : it->second] += e;
    }
    r.add_term(nk, c);
  }
  return r;
}

ExpoPoly ExpoPoly::substitute_exponent_var(int var,
                                           const LinForm& replacement) const {
  ExpoPoly r;
  for (const auto& [k, c] : terms_) {
    ExpoKey nk = k;
    auto it = nk.exp2.vars.find(var);
    if (it != nk.exp2.vars.end()) {
      const std::uint64_t mult = it->second;
      nk.exp2.vars.erase(it);
      LinForm scaled;
      scaled.c_const = replacement.c_const * mult;
      scaled.c_n = replacement.c_n * mult;
      for (const auto& [v, e] : replacement.vars) scaled.vars[v] = e * mult;
      nk.exp2 += scaled;
    }
    r.add_term(nk, c);
  }
  return r;
}

Bigint ExpoPoly::coefficient(const ExpoKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Bigint(0) : it->second;
}

Bigint ExpoPoly::evaluate(const std::vector<Bigint>& values,
                          const Bigint& n_value,
                          std::uint64_t max_bits) const {
  auto value_of = [&](int v) -> const Bigint& {
    if (v < 1 || static_cast<std::size_t>(v) > values.size()) {
      throw DomainError("no value bound for variable x" + std::to_string(v));
    }
    return values[static_cast<std::size_t>(v) - 1];
  };
  Bigint sum(0);
  for (const auto& [k, c] : terms_) {
    Bigint e = Bigint(k.exp2.c_const) + Bigint(k.exp2.c_n) * n_value;
    for (const auto& [v, ce] : k.exp2.vars) e += Bigint(ce) * value_of(v);
    Bigint term = checked_mul(c, checked_pow2(e, max_bits), max_bits);
    for (const auto& [v, d] : k.degrees) {
      term = checked_mul(term, checked_pow(value_of(v), Bigint(d), max_bits),
                         max_bits);
    }
    sum += term;
  }
  return sum;
}

LinForm ExpoPoly::to_linform() const {
  LinForm out;
  for (const auto& [k, c] : terms_) {
    if (!k.exp2.zero())
      throw NonLinearExponent("exponential term inside an exponent");
    if (c.sign() < 0)
      throw NonLinearExponent("negative coefficient inside an exponent");
    if (!c.fits_u64())
      throw NonLinearExponent("exponent coefficient too large");
    if (k.degrees.empty()) {
      out.c_const += c.to_u64();
      continue;
    }
    if (k.degrees.size() > 1 || k.degrees[0].second != 1)
      throw NonLinearExponent("non-affine exponent");
    out.vars[k.degrees[0].first] += c.to_u64();
  }
  return out;
}

ExpoPoly ep_pow2_of(const ExpoPoly& e) { return ExpoPoly::pow2(e.to_linform()); }

ExpandStats expand_stats(const ExpoPoly& p) {
  ExpandStats s;
  s.monomials = p.size();
  std::map<int, bool> seen;
  for (const auto& [k, c] : p.terms()) {
    for (const auto& [v, d] : k.degrees) {
      seen[v] = true;
      if (d > s.max_degree) s.max_degree = d;
    }
    for (const auto& [v, e] : k.exp2.vars) {
      seen[v] = true;
      if (e > s.max_exp_coeff) s.max_exp_coeff = e;
    }
  }
  s.variables = seen.size();
  return s;
}

// ---------------------------------------------------------------------------
// Emission

namespace {

void emit_linform_latex(const LinForm& e, std::string& out) {
  bool first = true;
  auto piece = [&](const std::string& s) {
    if (!first) out += " + ";
    out += s;
    first = false;
  };
  for (const auto& [v, c] : e.vars) {
    piece((c == 1 ? "" : std::to_string(c) + " ") + "x_{" + std::to_string(v) +
          "}");
  }
  if (e.c_n != 0) piece(e.c_n == 1 ? "n" : std::to_string(e.c_n) + " n");
  if (e.c_const != 0 || first) piece(std::to_string(e.c_const));
}

void emit_monomial_latex(const ExpoKey& k, const Bigint& c, std::string& out) {
  out += c.sign() < 0 ? "- " : "+ ";
  Bigint mag = abs(c);
  const bool has_sym = k.exp2.c_n != 0 || !k.exp2.vars.empty();
  LinForm shown = k.exp2;
  if (has_sym) {
    // Pull the coefficient's 2-power into the printed exponent.
    shown.c_const = mag.trailing_zeros();
    mag >>= shown.c_const;
  }
  const bool unit = mag == Bigint(1);
  if (!unit || (!has_sym && k.degrees.empty())) {
    out += mag.to_string();
    if (has_sym) out += " \\cdot ";
    else if (!k.degrees.empty()) out += " ";
  }
  if (has_sym) {
    out += "2^{";
    emit_linform_latex(shown, out);
    out += "}";
    if (!k.degrees.empty()) out += " ";
  }
  bool firstv = true;
  for (const auto& [v, d] : k.degrees) {
    if (!firstv) out += " ";
    out += "x_{" + std::to_string(v) + "}";
    if (d > 1) out += "^{" + std::to_string(d) + "}";
    firstv = false;
  }
}

void emit_linform_text(const LinForm& e, std::string& out) {
  bool first = true;
  auto piece = [&](const std::string& s) {
    if (!first) out += "+";
    out += s;
    first = false;
  };
  for (const auto& [v, c] : e.vars) {
    piece((c == 1 ? "" : std::to_string(c) + "*") + "x" + std::to_string(v));
  }
  if (e.c_n != 0) piece(e.c_n == 1 ? "n" : std::to_string(e.c_n) + "*n");
  if (e.c_const != 0 || first) piece(std::to_string(e.c_const));
}

}  // namespace

std::string emit(const ExpoPoly& p, EmitFormat format) {
  if (format == EmitFormat::Json) {
    // One record per monomial: c0 odd (sign carried), the folded 2-power
    // back in e_const, so records match the c0 * 2^(...) schema bit-exactly.
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [k, c] : p.terms()) {
      nlohmann::ordered_json rec;
      const std::uint64_t e_const = c.trailing_zeros();
      Bigint odd = c;
      odd >>= e_const;
      rec["c0"] = odd.to_string();
      rec["e_const"] = e_const;
      rec["e_n"] = k.exp2.c_n;
      nlohmann::ordered_json vars = nlohmann::ordered_json::array();
      std::map<int, std::pair<unsigned, std::uint64_t>> merged;
      for (const auto& [v, d] : k.degrees) merged[v].first = d;
      for (const auto& [v, e] : k.exp2.vars) merged[v].second = e;
      for (const auto& [v, de] : merged) {
        vars.push_back({{"x", v}, {"deg", de.first}, {"e2", de.second}});
      }
      rec["vars"] = std::move(vars);
      arr.push_back(std::move(rec));
    }
    return arr.dump(1);
  }
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) out += " ";
    first = false;
    if (format == EmitFormat::Latex) {
      emit_monomial_latex(k, c, out);
    } else {
      out += c.sign() < 0 ? "- " : "+ ";
      Bigint mag = abs(c);
      const bool has_sym = k.exp2.c_n != 0 || !k.exp2.vars.empty();
      LinForm shown = k.exp2;
      if (has_sym) {
        shown.c_const = mag.trailing_zeros();
        mag >>= shown.c_const;
      }
      bool wrote = false;
      if (!(mag == Bigint(1)) || (!has_sym && k.degrees.empty())) {
        out += mag.to_string();
        wrote = true;
      }
      if (has_sym) {
        if (wrote) out += "*";
        out += "2^(";
        emit_linform_text(shown, out);
        out += ")";
        wrote = true;
      }
      for (const auto& [v, d] : k.degrees) {
        if (wrote) out += "*";
        out += "x" + std::to_string(v);
        if (d > 1) out += "^" + std::to_string(d);
        wrote = true;
      }
    }
  }
  return out.empty() ? "0" : out;
}

ExpoPoly parse_expoly_json(std::string_view text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  ExpoPoly p;
  for (const auto& rec : arr) {
    LinForm e;
    e.c_const = rec.at("e_const").get<std::uint64_t>();
    e.c_n = rec.at("e_n").get<std::uint64_t>();
    std::vector<std::pair<int, unsigned>> degrees;
    for (const auto& v : rec.at("vars")) {
      const int x = v.at("x").get<int>();
      const unsigned deg = v.at("deg").get<unsigned>();
      const std::uint64_t e2 = v.at("e2").get<std::uint64_t>();
      if (deg > 0) degrees.emplace_back(x, deg);
      if (e2 > 0) e.vars[x] = e2;
    }
    p += ExpoPoly::monomial(Bigint(rec.at("c0").get<std::string>()),
                            std::move(e), std::move(degrees));
  }
  return p;
}

}  // namespace primeterm
