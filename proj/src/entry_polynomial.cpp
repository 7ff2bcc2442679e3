#include "lieprobe/entry_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lieprobe/errors.hpp"

namespace lieprobe {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  EntryPolynomial parse() {
    EntryPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at position " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  EntryPolynomial expr() {
    EntryPolynomial p = term();
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p = p - term();
      else return p;
    }
  }

  EntryPolynomial term() {
    EntryPolynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const EntryPolynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        const ExactScalar c = d.terms().begin()->second;
        if (!c.is_invertible()) fail("division by a non-invertible constant");
        p = p * EntryPolynomial::constant(c.inverse());
      } else {
        return p;
      }
    }
  }

  EntryPolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  EntryPolynomial power() {
    EntryPolynomial base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  int index() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an index");
    const int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (v < 1) fail("indices start at 1");
    return v;
  }

  EntryPolynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      EntryPolynomial p = expr();
      expect(')');
      return p;
    }
    if (accept_word("conj")) {
      expect('(');
      EntryPolynomial p = expr();
      expect(')');
      return p.conj();
    }
    if (accept_word("pi")) return EntryPolynomial::constant(ExactScalar::pi_power(1));
    if (accept_word("i")) return EntryPolynomial::constant(ExactScalar::i());
    const char c = s_[pos_];
    if (c == 'u') {
      ++pos_;
      if (accept('(')) {
        const int i = index();
        expect(',');
        const int j = index();
        expect(')');
        return EntryPolynomial::entry(i, j);
      }
      if (pos_ + 2 <= s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        const int i = s_[pos_] - '0', j = s_[pos_ + 1] - '0';
        pos_ += 2;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("use u(i,j) for indices above 9");
        if (i < 1 || j < 1) fail("indices start at 1");
        return EntryPolynomial::entry(i, j);
      }
      fail("expected uIJ or u(i,j)");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  EntryPolynomial number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    long scale = 0;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      const std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      digits += std::string(s_.substr(fs, pos_ - fs));
      scale = static_cast<long>(pos_ - fs);
    }
    if (digits.empty()) fail("malformed number");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    return EntryPolynomial::constant(ExactScalar(Rational(mpz_class(digits, 10), den)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

EntryPolynomial EntryPolynomial::constant(const ExactScalar& c) {
  EntryPolynomial p;
  p.add({}, c);
  return p;
}

EntryPolynomial EntryPolynomial::entry(int i, int j, bool conj) {
  if (i < 1 || j < 1) throw ValidationError("entry indices start at 1");
  EntryPolynomial p;
  p.add({EntryFactor{i, j, conj}}, ExactScalar(1));
  return p;
}

EntryPolynomial EntryPolynomial::parse(std::string_view text) { return Parser(text).parse(); }

int EntryPolynomial::max_index() const {
  int m = 0;
  for (const auto& [mono, c] : terms_)
    for (const auto& f : mono) m = std::max({m, f.i, f.j});
  return m;
}

bool EntryPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void EntryPolynomial::add(Monomial m, const ExactScalar& c) {
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EntryPolynomial EntryPolynomial::operator-() const {
  EntryPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

EntryPolynomial EntryPolynomial::conj() const {
  EntryPolynomial out;
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    for (auto& f : m) f.conj = !f.conj;
    out.add(std::move(m), c.conj());
  }
  return out;
}

EntryPolynomial& EntryPolynomial::operator+=(const EntryPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

EntryPolynomial operator*(const EntryPolynomial& a, const EntryPolynomial& b) {
  EntryPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      EntryPolynomial::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  return out;
}

EntryPolynomial EntryPolynomial::pow(unsigned e) const {
  EntryPolynomial result = constant(ExactScalar(1)), base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Complex EntryPolynomial::eval(const Matrix& u) const {
  Complex acc{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    Complex v = c.to_double();
    for (const auto& f : m) {
      if (f.i > u.rows() || f.j > u.cols()) throw ValidationError("entry index exceeds matrix size");
      const Complex x = u(f.i - 1, f.j - 1);
      v *= f.conj ? std::conj(x) : x;
    }
    acc += v;
  }
  return acc;
}

std::string EntryPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (const auto& f : m) {
      os << "*";
      if (f.conj) os << "conj(u(" << f.i << "," << f.j << "))";
      else os << "u(" << f.i << "," << f.j << ")";
    }
  }
  return os.str();
}

FiniteTypeFunction expand(const EntryPolynomial& p, Group g, int n) {
  if (p.max_index() > n) throw ValidationError("entry index exceeds the rank");
  const auto entries = symbolic_entries(g, n);
  std::map<EntryFactor, FiniteTypeFunction> cache;
  auto factor = [&](const EntryFactor& f) -> const FiniteTypeFunction& {
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    const auto& e = entries[static_cast<std::size_t>((f.i - 1) * n + (f.j - 1))];
    return cache.emplace(f, f.conj ? e.conj() : e).first->second;
  };
  FiniteTypeFunction out(g, n);
  for (const auto& [m, c] : p.terms()) {
    FiniteTypeFunction t = FiniteTypeFunction::constant(g, n, c);
    for (const auto& f : m) t = t * factor(f);
    out += t;
  }
  return out;
}

}  // namespace lieprobe
