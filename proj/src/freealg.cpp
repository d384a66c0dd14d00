#include "preproj/freealg.hpp"

#include <cctype>
#include <sstream>

namespace preproj {

Path Path::of_arrow(const Quiver& q, int a) {
  const Arrow& ar = q.arrow(a);
  return {ar.source, ar.target, {a}};
}

std::optional<Path> Path::then(const Path& q) const {
  if (target != q.source) return std::nullopt;
  Path r{source, q.target, arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

bool PathOrder::operator()(const Path& a, const Path& b) const {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

FreeElem FreeElem::path(QuiverPtr q, FieldSpec f, const Path& p, const Scalar& c) {
  FreeElem x(std::move(q), f);
  x.add_term(p, c);
  return x;
}

FreeElem FreeElem::path(QuiverPtr q, FieldSpec f, const Path& p) { return path(std::move(q), f, p, Scalar::one(f)); }

FreeElem FreeElem::arrow(QuiverPtr q, FieldSpec f, int a) {
  Path p = Path::of_arrow(*q, a);
  return path(std::move(q), f, p);
}

FreeElem FreeElem::vertex(QuiverPtr q, FieldSpec f, int v) {
  if (v < 0 || v >= q->vertex_count()) throw UnknownName("vertex out of range: e" + std::to_string(v));
  return path(std::move(q), f, Path::trivial(v));
}

Scalar FreeElem::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar::zero(f_) : it->second;
}

void FreeElem::add_term(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreeElem::check(const FreeElem& b) const {
  if (!(f_ == b.f_)) throw QuiverMismatch();
  if (q_ != b.q_ && !(q_ && b.q_ && *q_ == *b.q_)) throw QuiverMismatch();
}

FreeElem FreeElem::operator+(const FreeElem& b) const {
  check(b);
  FreeElem r = *this;
  for (const auto& [p, c] : b.terms_) r.add_term(p, c);
  return r;
}

FreeElem FreeElem::operator-() const { return scaled(-Scalar::one(f_)); }

FreeElem FreeElem::operator-(const FreeElem& b) const { return *this + (-b); }

FreeElem FreeElem::scaled(const Scalar& c) const {
  FreeElem r(q_, f_);
  if (c.is_zero()) return r;
  for (const auto& [p, d] : terms_) r.terms_.emplace(p, d * c);
  return r;
}

FreeElem FreeElem::operator*(const FreeElem& b) const {
  check(b);
  FreeElem r(q_, f_);
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : b.terms_)
      if (auto pq = p.then(q)) r.add_term(*pq, c * d);
  return r;
}

FreeElem FreeElem::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  FreeElem r(q_, f_);
  for (int v = 0; v < q_->vertex_count(); ++v) r.add_term(Path::trivial(v), Scalar::one(f_));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::optional<std::pair<int, int>> FreeElem::endpoints() const {
  std::optional<std::pair<int, int>> e;
  for (const auto& [p, c] : terms_) {
    std::pair<int, int> st{p.source, p.target};
    if (e && *e != st) return std::nullopt;
    e = st;
  }
  return e;
}

int FreeElem::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.length(); }
int FreeElem::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.length(); }

bool FreeElem::operator==(const FreeElem& b) const { return f_ == b.f_ && terms_ == b.terms_; }

FreeElem multiply(const FreeElem& a, const FreeElem& b) { return a * b; }
FreeElem commutator(const FreeElem& a, const FreeElem& b) { return a * b - b * a; }

std::string format_path(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

std::string format_element(const FreeElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  const Scalar one = Scalar::one(x.field());
  for (const auto& [p, c] : x.terms()) {
    Scalar mag = c;
    bool neg = false;
    if (!x.field().is_prime() && c.rational() < 0) {
      neg = true;
      mag = -c;
    }
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (!mag.is_one()) out += mag.str() + "*";
    out += format_path(*x.quiver(), p);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, QuiverPtr q, const FieldSpec& f, const ParamMap& params)
      : s_(s), q_(std::move(q)), f_(f), params_(params) {}

  FreeElem run() {
    FreeElem r = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }

 private:
  // An operand is either a pure scalar or an element.
  struct Val {
    bool is_scalar = true;
    Scalar s;
    FreeElem e;
  };

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FreeElem unit() const {
    FreeElem r(q_, f_);
    for (int v = 0; v < q_->vertex_count(); ++v) r.add_term(Path::trivial(v), Scalar::one(f_));
    return r;
  }
  FreeElem as_elem(const Val& v) const { return v.is_scalar ? unit().scaled(v.s) : v.e; }

  Val add(const Val& a, const Val& b, bool minus) const {
    if (a.is_scalar && b.is_scalar) return {true, minus ? a.s - b.s : a.s + b.s, {}};
    FreeElem x = as_elem(a), y = as_elem(b);
    return {false, {}, minus ? x - y : x + y};
  }
  Val mul(const Val& a, const Val& b) const {
    if (a.is_scalar && b.is_scalar) return {true, a.s * b.s, {}};
    if (a.is_scalar) return {false, {}, b.e.scaled(a.s)};
    if (b.is_scalar) return {false, {}, a.e.scaled(b.s)};
    return {false, {}, a.e * b.e};
  }

  FreeElem expr() { return as_elem(sum()); }

  Val sum() {
    Val acc = product();
    for (;;) {
      if (eat('+'))
        acc = add(acc, product(), false);
      else if (eat('-'))
        acc = add(acc, product(), true);
      else
        return acc;
    }
  }

  Val product() {
    bool neg = false;
    while (eat('-')) neg = !neg;
    Val acc = power();
    while (eat('*')) acc = mul(acc, power());
    if (neg) acc = mul({true, -Scalar::one(f_), {}}, acc);
    return acc;
  }

  Val power() {
    Val base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      long long k = integer();
      if (k < 0 || k > 10000) throw SyntaxError("bad exponent", start);
      if (base.is_scalar) return {true, base.s.pow(k), {}};
      return {false, {}, base.e.pow(static_cast<int>(k))};
    }
    return base;
  }

  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer", pos_);
    if (pos_ - start > 18) throw SyntaxError("integer too large", start);
    return std::stoll(s_.substr(start, pos_ - start));
  }

  Val atom() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Val v = sum();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      long long num = integer();
      skip();
      // A '/' directly after an integer starts a fraction.
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        long long den = integer();
        if (den == 0) throw SyntaxError("zero denominator", start);
        return {true, Scalar(f_, BigRational(num, den)), {}};
      }
      return {true, Scalar(f_, num), {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (auto a = q_->find_arrow(name)) return {false, {}, FreeElem::arrow(q_, f_, *a)};
      if (auto it = params_.find(name); it != params_.end()) return {true, it->second, {}};
      if (name.size() > 1 && name[0] == 'e') {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        if (digits && name.size() < 9) {
          int v = std::stoi(name.substr(1));
          if (v >= q_->vertex_count()) throw SyntaxError("vertex out of range: " + name, start);
          return {false, {}, FreeElem::vertex(q_, f_, v)};
        }
      }
      throw SyntaxError("unknown name '" + name + "'", start);
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  const std::string& s_;
  QuiverPtr q_;
  FieldSpec f_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

QuiverPtr variable_quiver(const std::vector<std::string>& vars) {
  auto q = std::make_shared<Quiver>(1);
  for (const auto& v : vars) q->add_selfbar_loop(v, 0);
  return q;
}

}  // namespace

FreeElem parse_element(const std::string& text, QuiverPtr q, const FieldSpec& f, const ParamMap& params) {
  return Parser(text, std::move(q), f, params).run();
}

NCPoly::NCPoly(std::vector<std::string> vars, const FieldSpec& f)
    : vars_(std::move(vars)), poly_(variable_quiver(vars_), f) {}

NCPoly NCPoly::parse(const std::string& text, std::vector<std::string> vars, const FieldSpec& f) {
  NCPoly p(std::move(vars), f);
  p.poly_ = parse_element(text, p.poly_.quiver(), f);
  return p;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r = *this;
  r.poly_ = poly_ * o.poly_;
  return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r.poly_ = poly_ + o.poly_;
  return r;
}

FreeElem substitute(const NCPoly& f, const std::map<std::string, FreeElem>& assignment) {
  if (assignment.empty()) throw UnknownName("empty assignment");
  const FreeElem& any = assignment.begin()->second;
  std::optional<int> base;
  for (const auto& [name, img] : assignment) {
    if (img.is_zero()) continue;
    auto e = img.endpoints();
    if (!e || e->first != e->second || (base && *base != e->first))
      throw IncompatibleEndpoints("image of " + name + " is not a loop at a common vertex");
    base = e->first;
  }
  FreeElem out(any.quiver(), any.field());
  const Quiver& vq = *f.var_quiver();
  for (const auto& [p, c] : f.poly().terms()) {
    if (!base) {
      if (p.arrows.empty()) throw IncompatibleEndpoints("constant term needs a base vertex");
      continue;
    }
    FreeElem term = FreeElem::vertex(any.quiver(), any.field(), *base).scaled(c);
    for (int a : p.arrows) {
      auto it = assignment.find(vq.arrow(a).name);
      if (it == assignment.end()) throw UnknownName("unbound variable " + vq.arrow(a).name);
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace preproj
