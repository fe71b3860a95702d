#include "hcx/manifold_file.hpp"

#include "hcx/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace hcx {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class LineParser {
public:
  explicit LineParser(std::string_view text) : text_(text) {}

  ManifoldSpec run() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      auto end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_;
      std::string_view raw = text_.substr(start, end - start);
      start = end + 1;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const std::string line = trim(raw);
      if (!line.empty()) directive(line);
      if (end == text_.size()) break;
    }
    finish();
    return std::move(spec_);
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

  Expr expr(const std::string& s) {
    Expr::Bindings lets;
    for (const auto& [name, e] : spec_.lets) lets.emplace(name, e);
    try {
      return Expr::parse(s, lets);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  double number(const std::string& s) {
    const Expr e = expr(s);
    if (!e.is_constant()) fail("expected a constant, got '" + s + "'");
    return e.eval(Point{});
  }

  int index(const std::string& s, int lo, int hi) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      fail("expected an index, got '" + s + "'");
    }
    if (v < lo || v > hi) fail("index " + s + " out of range");
    return v;
  }

  /// "HEAD = BODY" after the keyword.
  std::pair<std::string, std::string> assignment(const std::string& rest) {
    const auto eq = rest.find('=');
    if (eq == std::string::npos) fail("expected '='");
    return {trim(std::string_view(rest).substr(0, eq)), trim(std::string_view(rest).substr(eq + 1))};
  }

  std::vector<Expectation>& expect_scope() {
    return spec_.structures.empty() ? spec_.expect : spec_.structures.back().expect;
  }

  Expectation& expectation(const std::string& key) {
    auto& scope = expect_scope();
    for (auto& e : scope)
      if (e.key == key) return e;
    scope.push_back(Expectation{key, std::nullopt, std::nullopt, {}});
    return scope.back();
  }

  void directive(const std::string& line) {
    const auto sp = line.find_first_of(" \t=");
    const std::string kw = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? std::string() : trim(std::string_view(line).substr(sp));
    if (kw == "manifold") {
      if (rest.empty()) fail("manifold needs an id");
      spec_.id = rest;
    } else if (kw == "title") {
      spec_.title = rest;
    } else if (kw == "note") {
      spec_.notes.push_back(rest);
    } else if (kw == "kind") {
      if (rest == "chart")
        spec_.kind = Construction::Chart;
      else if (rest == "embedding")
        spec_.kind = Construction::Embedding;
      else if (rest == "lie")
        spec_.kind = Construction::Lie;
      else
        fail("unknown kind '" + rest + "'");
      kind_seen_ = true;
    } else if (kw == "signature") {
      spec_.signature = rest;
    } else if (kw == "let") {
      auto [name, body] = assignment(rest);
      if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) fail("bad let name");
      if (name == "pi" || (name.size() == 2 && name[0] == 'u' && name[1] >= '1' && name[1] <= '4'))
        fail("let cannot rebind '" + name + "'");
      for (const auto& l : spec_.lets)
        if (l.first == name) fail("let '" + name + "' defined twice");
      Expr e = expr(body);
      spec_.lets.emplace_back(name, std::move(e));
    } else if (kw == "metric") {
      auto [head, body] = assignment(rest);
      std::istringstream is(head);
      std::string si, sj, extra;
      is >> si >> sj;
      if (!(is >> extra).fail() || sj.empty()) fail("metric needs two indices");
      int i = index(si, 1, kDim) - 1, j = index(sj, 1, kDim) - 1;
      if (i > j) std::swap(i, j);
      if (spec_.metric[i][j]) fail("metric component given twice");
      spec_.metric[i][j] = expr(body);
    } else if (kw == "embedding") {
      auto [head, body] = assignment(rest);
      const int k = index(head, 1, 64);
      if (k != static_cast<int>(spec_.embedding.size()) + 1) fail("embedding components must be consecutive");
      spec_.embedding.push_back(expr(body));
    } else if (kw == "ambient") {
      for (char c : rest)
        if (c != '+' && c != '-') fail("ambient must be a string of + and -");
      spec_.ambient = rest;
    } else if (kw == "frame") {
      auto [head, body] = assignment(rest);
      const int a = index(head, 1, kDim) - 1;
      const auto parts = split(body, ',');
      if (parts.size() != kDim) fail("frame vector needs four components");
      for (int i = 0; i < kDim; ++i) spec_.frame[a][i] = expr(parts[i]);
    } else if (kw == "generator") {
      auto [head, body] = assignment(rest);
      const int a = index(head, 1, kDim) - 1;
      std::vector<std::vector<double>> m;
      for (const auto& row : split(body, ';')) {
        std::istringstream is(row);
        std::vector<double> r;
        std::string tok;
        while (is >> tok) r.push_back(number(tok));
        m.push_back(std::move(r));
      }
      for (const auto& r : m)
        if (r.size() != m.size()) fail("generator must be a square matrix");
      spec_.generators[a] = std::move(m);
    } else if (kw == "require") {
      static const char* ops[] = {"!=", ">=", "<=", ">", "<"};
      for (const char* op : ops) {
        const auto pos = rest.find(op);
        if (pos == std::string::npos) continue;
        spec_.guards.push_back(
            Guard{expr(trim(rest.substr(0, pos))), op, expr(trim(rest.substr(pos + std::string(op).size())))});
        return;
      }
      fail("require needs one of != >= <= > <");
    } else if (kw == "box") {
      const auto parts = split(rest, ',');
      if (parts.size() != kDim) fail("box needs four ranges");
      std::array<std::pair<double, double>, kDim> box{};
      for (int i = 0; i < kDim; ++i) {
        const auto r = split(parts[i], ':');
        if (r.size() != 2) fail("box range must look like LO:HI");
        box[i] = {number(r[0]), number(r[1])};
        if (!(box[i].first <= box[i].second)) fail("box range is empty");
      }
      spec_.box = box;
    } else if (kw == "point") {
      const auto parts = split(rest, ',');
      if (parts.size() != kDim) fail("point needs four coordinates");
      Point p{};
      for (int i = 0; i < kDim; ++i) p[i] = number(parts[i]);
      spec_.points.push_back(p);
    } else if (kw == "tolerance") {
      if (rest == "analytic")
        spec_.embedded_tolerance = false;
      else if (rest == "embedded")
        spec_.embedded_tolerance = true;
      else
        fail("tolerance must be analytic or embedded");
    } else if (kw == "structure") {
      if (rest.empty()) fail("structure needs a name");
      for (const auto& s : spec_.structures)
        if (s.name == rest) fail("structure '" + rest + "' defined twice");
      spec_.structures.push_back(StructureDecl{rest, {}, {}, {}, {}});
    } else if (kw == "J1" || kw == "J2") {
      if (spec_.structures.empty()) fail(kw + " outside a structure");
      auto [head, body] = assignment(rest);
      if (!head.empty()) fail("unexpected '" + head + "'");
      (kw == "J1" ? spec_.structures.back().j1 : spec_.structures.back().j2) = body;
    } else if (kw == "expect") {
      auto [key, body] = assignment(rest);
      Expectation& e = expectation(key);
      if (e.printed) fail("expectation '" + key + "' given twice");
      e.printed = expr(body);
    } else if (kw == "erratum") {
      auto [key, body] = assignment(rest);
      const auto bar = body.find('|');
      Expectation& e = expectation(key);
      if (e.erratum) fail("erratum '" + key + "' given twice");
      e.erratum = expr(trim(std::string_view(body).substr(0, bar)));
      if (bar != std::string::npos) e.note = trim(std::string_view(body).substr(bar + 1));
    } else if (kw == "class") {
      auto [key, body] = assignment(rest);
      if (body != "true" && body != "false") fail("class value must be true or false");
      auto& scope = spec_.structures.empty() ? spec_.classes : spec_.structures.back().classes;
      scope.push_back(ClassExpectation{key, body == "true"});
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }

  void finish() {
    if (spec_.id.empty()) throw ParseError("missing 'manifold' line");
    if (!kind_seen_) throw ParseError("missing 'kind' line");
    for (const auto& s : spec_.structures)
      if (s.j1.empty() || s.j2.empty()) throw ParseError("structure '" + s.name + "' needs J1 and J2");
  }

  std::string_view text_;
  ManifoldSpec spec_;
  int line_ = 0;
  bool kind_seen_ = false;
};

void write_expectations(std::ostream& os, const std::vector<Expectation>& ex, const std::vector<ClassExpectation>& cl) {
  for (const auto& e : ex) {
    if (e.printed) os << "expect " << e.key << " = " << e.printed->source() << '\n';
    if (e.erratum) {
      os << "erratum " << e.key << " = " << e.erratum->source();
      if (!e.note.empty()) os << " | " << e.note;
      os << '\n';
    }
  }
  for (const auto& c : cl) os << "class " << c.key << " = " << (c.value ? "true" : "false") << '\n';
}

bool same_opt(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (static_cast<bool>(a) != static_cast<bool>(b)) return false;
  return !a || a->same_tree(*b);
}

bool same_expect(const std::vector<Expectation>& a, const std::vector<Expectation>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].key != b[i].key || a[i].note != b[i].note || !same_opt(a[i].printed, b[i].printed) ||
        !same_opt(a[i].erratum, b[i].erratum))
      return false;
  return true;
}

bool same_classes(const std::vector<ClassExpectation>& a, const std::vector<ClassExpectation>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].key != b[i].key || a[i].value != b[i].value) return false;
  return true;
}

} // namespace

std::string_view construction_name(Construction c) {
  switch (c) {
  case Construction::Chart:
    return "chart";
  case Construction::Embedding:
    return "embedding";
  case Construction::Lie:
    return "lie";
  }
  return "?";
}

bool Guard::holds(const Point& u) const {
  const double a = lhs.eval(u), b = rhs.eval(u);
  if (op == "!=") return a != b;
  if (op == ">") return a > b;
  if (op == "<") return a < b;
  if (op == ">=") return a >= b;
  if (op == "<=") return a <= b;
  return false;
}

std::string Guard::text() const { return lhs.source() + " " + op + " " + rhs.source(); }

std::optional<Expr> Expectation::target(bool printed_only) const {
  if (printed_only) return printed;
  return erratum ? erratum : printed;
}

ManifoldSpec parse_manifold(std::string_view text) { return LineParser(text).run(); }

std::string serialize(const ManifoldSpec& s) {
  std::ostringstream os;
  os << "manifold " << s.id << '\n';
  if (!s.title.empty()) os << "title " << s.title << '\n';
  os << "kind " << construction_name(s.kind) << '\n';
  os << "signature " << s.signature << '\n';
  if (s.embedded_tolerance) os << "tolerance embedded\n";
  for (const auto& n : s.notes) os << "note " << n << '\n';
  for (const auto& [name, e] : s.lets) os << "let " << name << " = " << e.source() << '\n';
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j)
      if (s.metric[i][j]) os << "metric " << i + 1 << ' ' << j + 1 << " = " << s.metric[i][j]->source() << '\n';
  if (!s.ambient.empty()) os << "ambient " << s.ambient << '\n';
  for (std::size_t k = 0; k < s.embedding.size(); ++k)
    os << "embedding " << k + 1 << " = " << s.embedding[k].source() << '\n';
  for (int a = 0; a < kDim; ++a) {
    if (!s.frame[a][0]) continue;
    os << "frame " << a + 1 << " =";
    for (int i = 0; i < kDim; ++i) os << (i ? ", " : " ") << s.frame[a][i]->source();
    os << '\n';
  }
  for (int a = 0; a < kDim; ++a) {
    if (s.generators[a].empty()) continue;
    os << "generator " << a + 1 << " =";
    for (std::size_t r = 0; r < s.generators[a].size(); ++r) {
      os << (r ? " ;" : "");
      for (double v : s.generators[a][r]) os << ' ' << fmt(v);
    }
    os << '\n';
  }
  for (const auto& g : s.guards) os << "require " << g.text() << '\n';
  if (s.box) {
    os << "box";
    for (int i = 0; i < kDim; ++i) os << (i ? ", " : " ") << fmt((*s.box)[i].first) << ':' << fmt((*s.box)[i].second);
    os << '\n';
  }
  for (const auto& p : s.points) {
    os << "point";
    for (int i = 0; i < kDim; ++i) os << (i ? ", " : " ") << fmt(p[i]);
    os << '\n';
  }
  write_expectations(os, s.expect, s.classes);
  for (const auto& st : s.structures) {
    os << "structure " << st.name << '\n';
    os << "J1 = " << st.j1 << '\n';
    os << "J2 = " << st.j2 << '\n';
    write_expectations(os, st.expect, st.classes);
  }
  return os.str();
}

bool equivalent(const ManifoldSpec& a, const ManifoldSpec& b) {
  if (a.id != b.id || a.title != b.title || a.kind != b.kind || a.signature != b.signature ||
      a.ambient != b.ambient || a.embedded_tolerance != b.embedded_tolerance || a.notes != b.notes ||
      a.points != b.points || a.box != b.box || a.generators != b.generators)
    return false;
  if (a.lets.size() != b.lets.size()) return false;
  for (std::size_t i = 0; i < a.lets.size(); ++i)
    if (a.lets[i].first != b.lets[i].first || !a.lets[i].second.same_tree(b.lets[i].second)) return false;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!same_opt(a.metric[i][j], b.metric[i][j]) || !same_opt(a.frame[i][j], b.frame[i][j])) return false;
  if (a.embedding.size() != b.embedding.size()) return false;
  for (std::size_t k = 0; k < a.embedding.size(); ++k)
    if (!a.embedding[k].same_tree(b.embedding[k])) return false;
  if (a.guards.size() != b.guards.size()) return false;
  for (std::size_t k = 0; k < a.guards.size(); ++k)
    if (a.guards[k].op != b.guards[k].op || !a.guards[k].lhs.same_tree(b.guards[k].lhs) ||
        !a.guards[k].rhs.same_tree(b.guards[k].rhs))
      return false;
  if (!same_expect(a.expect, b.expect) || !same_classes(a.classes, b.classes)) return false;
  if (a.structures.size() != b.structures.size()) return false;
  for (std::size_t k = 0; k < a.structures.size(); ++k) {
    const auto &x = a.structures[k], &y = b.structures[k];
    if (x.name != y.name || x.j1 != y.j1 || x.j2 != y.j2 || !same_expect(x.expect, y.expect) ||
        !same_classes(x.classes, y.classes))
      return false;
  }
  return true;
}

} // namespace hcx
