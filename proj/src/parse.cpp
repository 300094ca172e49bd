#include "kleinring/parse.hpp"

#include <cctype>

namespace kleinring {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected an integer", start);
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }
  std::size_t position() const { return pos_; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

// Polynomials in t: sums of [coef][t[^exp]] terms with + and - signs.
std::vector<long long> parse_poly(Cursor& cur) {
  std::vector<long long> coeffs;
  auto bump = [&](std::size_t e, long long c) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    coeffs[e] += c;
  };
  bool first = true;
  while (true) {
    long long sign = 1;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      break;
    }
    first = false;
    long long coef = 1;
    bool have_coef = false;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef = cur.integer();
      have_coef = true;
    }
    if (cur.accept('t')) {
      long long e = 1;
      if (cur.accept('^')) e = cur.integer();
      if (e < 0 || e > 64) throw ParseError("exponent out of range", cur.position());
      bump(static_cast<std::size_t>(e), sign * coef);
    } else {
      if (!have_coef) throw ParseError("expected a polynomial term", cur.position());
      bump(0, sign * coef);
    }
    char nxt = cur.peek();
    if (nxt != '+' && nxt != '-') break;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

LatticePlan parse_node(Cursor& cur);

LatticePlan parse_base(Cursor& cur) {
  LatticePlan plan;
  std::size_t at = cur.position();
  if (cur.accept_word("sum(")) {
    plan.kind = LatticePlan::Kind::Sum;
    plan.children.push_back(parse_node(cur));
    while (cur.accept(',')) plan.children.push_back(parse_node(cur));
    cur.expect(')');
    return plan;
  }
  if (cur.accept_word("free(")) {
    plan.kind = LatticePlan::Kind::Free;
    long long r = cur.integer();
    if (r < 0) throw ParseError("free rank must be nonnegative", at);
    plan.free_count = static_cast<unsigned>(r);
    cur.expect(')');
    return plan;
  }
  if (cur.accept_word("tube(")) {
    plan.kind = LatticePlan::Kind::Tube;
    if (!cur.accept_word("f=")) throw ParseError("expected f=", cur.position());
    plan.poly = parse_poly(cur);
    cur.expect(',');
    if (!cur.accept_word("n=")) throw ParseError("expected n=", cur.position());
    long long n = cur.integer();
    if (n < 1) throw ParseError("layer must be >= 1", at);
    plan.layer = static_cast<unsigned>(n);
    cur.expect(')');
    return plan;
  }
  if (cur.accept_word("etube(")) {
    plan.kind = LatticePlan::Kind::ETube;
    if (!cur.accept_word("l=")) throw ParseError("expected l=", cur.position());
    if (cur.accept_word("inf")) {
      plan.lambda = TubeId::Point::LInf;
    } else if (cur.accept('0')) {
      plan.lambda = TubeId::Point::L0;
    } else if (cur.accept('1')) {
      plan.lambda = TubeId::Point::L1;
    } else {
      throw ParseError("lambda must be 0, 1 or inf", cur.position());
    }
    cur.expect(',');
    if (!cur.accept_word("i=")) throw ParseError("expected i=", cur.position());
    long long i = cur.integer();
    if (i != 1 && i != 2) throw ParseError("branch must be 1 or 2", at);
    plan.branch = static_cast<int>(i);
    cur.expect(',');
    if (!cur.accept_word("n=")) throw ParseError("expected n=", cur.position());
    long long n = cur.integer();
    if (n < 1) throw ParseError("layer must be >= 1", at);
    plan.layer = static_cast<unsigned>(n);
    cur.expect(')');
    return plan;
  }
  plan.kind = LatticePlan::Kind::Family;
  if (cur.accept('A')) {
    plan.family.base = FamilyBase::A;
  } else if (cur.accept_word("R[pp]")) {
    plan.family.base = FamilyBase::Rpp;
  } else if (cur.accept_word("R[p0]")) {
    plan.family.base = FamilyBase::Rp0;
  } else if (cur.accept_word("R[0p]")) {
    plan.family.base = FamilyBase::R0p;
  } else if (cur.accept_word("R[00]")) {
    plan.family.base = FamilyBase::R00;
  } else {
    throw ParseError("expected a lattice spec", cur.position());
  }
  if (cur.accept('^'))
    plan.family.translate = static_cast<int>(cur.integer());
  return plan;
}

LatticePlan parse_node(Cursor& cur) { return parse_base(cur); }

}  // namespace

LatticePlan parse_spec(const std::string& s) {
  Cursor cur(s);
  LatticePlan plan = parse_node(cur);
  if (!cur.done()) throw ParseError("trailing input", cur.position());
  plan.text = s;
  return plan;
}

TypedLattice build_plan(const Dvr& ring, const LatticePlan& plan) {
  switch (plan.kind) {
    case LatticePlan::Kind::Family:
      return translate_family(ring, plan.family);
    case LatticePlan::Kind::Free:
      return make_free(ring, plan.free_count);
    case LatticePlan::Kind::Tube: {
      FpPoly f;
      for (long long c : plan.poly)
        f.push_back(static_cast<std::uint32_t>(((c % static_cast<long long>(ring.p())) +
                                                static_cast<long long>(ring.p())) %
                                               static_cast<long long>(ring.p())));
      f = poly_trim(std::move(f));
      if (poly_deg(f) < 1) throw SemanticError("tube point must have degree >= 1");
      if (!poly_is_monic(f))
        throw SemanticError("tube point must be a unital polynomial");
      if (!poly_is_irreducible(ring.p(), f))
        throw SemanticError("tube point must be irreducible: " + poly_to_string(f));
      FpPoly t{0, 1};
      FpPoly t1{static_cast<std::uint32_t>(ring.p() - 1), 1};
      if (f == t || f == t1)
        throw SemanticError("exceptional point must use etube");
      return homogeneous_tube(ring, f, plan.layer);
    }
    case LatticePlan::Kind::ETube:
      return exceptional_tube(ring, plan.lambda, plan.branch, plan.layer);
    case LatticePlan::Kind::Sum: {
      TypedLattice acc = make_free(ring, 0);
      for (const auto& child : plan.children)
        acc = direct_sum(acc, build_plan(ring, child));
      return acc;
    }
  }
  throw SemanticError("empty plan");
}

}  // namespace kleinring
