#include "preproj/dsl.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace preproj {

namespace {

struct Stmt {
  std::string text;
  int line;
  char end;  // ';', '{', '}' or 0 at end of input
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits on ';', '{', '}' and line ends of header lines, dropping '#' comments.
std::vector<Stmt> statements(const std::string& text) {
  std::vector<Stmt> out;
  std::string cur;
  int line = 1, start = 1;
  bool comment = false;
  auto flush = [&](char end) {
    std::string t = trim(cur);
    if (!t.empty() || end == '{' || end == '}') out.push_back({t, start, end});
    cur.clear();
  };
  for (char c : text) {
    if (comment) {
      if (c == '\n') comment = false;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';' || c == '{' || c == '}') {
      flush(c);
    } else {
      if (trim(cur).empty()) start = line;
      cur += c;
    }
    if (c == '\n') {
      ++line;
      // A `presentation NAME` header ends at its line break.
      std::string t = trim(cur);
      if (t.rfind("presentation", 0) == 0) flush(';');
    }
  }
  flush(0);
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> w;
  std::string x;
  while (is >> x) w.push_back(x);
  return w;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DslError("expected an integer, got '" + s + "'", line);
  }
}

std::shared_ptr<Quiver> parse_quiver_block(const std::vector<Stmt>& st, std::size_t& i) {
  std::shared_ptr<Quiver> q;
  static const std::regex vertices(R"(vertices\s+(\d+)\s*\.\.\s*(\d+))");
  static const std::regex arrow(R"(arrow\s+(\w+)\s*:\s*(\d+)\s*->\s*(\d+))");
  static const std::regex bar(R"(bar\s+(\w+)\s*=\s*(\w+))");
  static const std::regex loop(R"(loop\s+(\w+)\s*:\s*(\d+)\s+selfbar)");
  for (; i < st.size(); ++i) {
    const Stmt& s = st[i];
    if (s.end == '}') {
      if (!s.text.empty()) throw DslError("missing ';' before '}'", s.line);
      if (!q) throw DslError("quiver block without vertices", s.line);
      q->validate();
      return q;
    }
    std::smatch m;
    try {
      if (std::regex_match(s.text, m, vertices)) {
        if (to_int(m[1], s.line) != 0) throw DslError("vertices must start at 0", s.line);
        q = std::make_shared<Quiver>(to_int(m[2], s.line) + 1);
        continue;
      }
      if (!q) throw DslError("declare vertices first", s.line);
      if (std::regex_match(s.text, m, arrow)) {
        q->add_arrow(m[1], to_int(m[2], s.line), to_int(m[3], s.line));
      } else if (std::regex_match(s.text, m, bar)) {
        q->pair_bar(q->arrow_id(m[1]), q->arrow_id(m[2]));
      } else if (std::regex_match(s.text, m, loop)) {
        q->add_selfbar_loop(m[1], to_int(m[2], s.line));
      } else {
        throw DslError("unrecognised quiver statement '" + s.text + "'", s.line);
      }
    } catch (const DslError&) {
      throw;
    } catch (const std::exception& e) {
      throw DslError(e.what(), s.line);
    }
  }
  throw DslError("unterminated quiver block", st.empty() ? 0 : st.back().line);
}

}  // namespace

Presentation parse_presentation(const std::string& text, const ParamMap& params,
                                std::optional<FieldSpec> field_override) {
  auto st = statements(text);
  Presentation p;
  std::optional<FieldSpec> field = field_override;
  std::vector<std::pair<std::string, int>> rel_texts;
  for (std::size_t i = 0; i < st.size(); ++i) {
    const Stmt& s = st[i];
    auto w = words(s.text);
    if (w.empty()) {
      if (s.end == '}') throw DslError("unexpected '}'", s.line);
      continue;
    }
    try {
      if (w[0] == "presentation" && w.size() == 2 && s.end == ';') {
        p.name = w[1];
      } else if (w[0] == "field" && s.end == ';') {
        if (!field_override) field = FieldSpec::parse(s.text.substr(5));
      } else if (w[0] == "cap" && s.end == ';') {
        if (w.size() == 2) p.cap = CapPolicy::fixed(to_int(w[1], s.line));
        else if (w.size() == 3 && w[1] == "auto") p.cap = CapPolicy::autoseed(to_int(w[2], s.line));
        else throw DslError("expected 'cap N' or 'cap auto N'", s.line);
      } else if (w[0] == "quiver" && s.end == ';') {
        if (w.size() != 3 || w[1] != "dynkin" || w[2].size() < 2) throw DslError("expected 'quiver dynkin XN'", s.line);
        DynkinType t = DynkinType::parse(w[2].substr(0, 1), to_int(w[2].substr(1), s.line));
        p.quiver = std::make_shared<Quiver>(build_dynkin_quiver(t));
      } else if (w[0] == "quiver" && w.size() == 1 && s.end == '{') {
        ++i;
        p.quiver = parse_quiver_block(st, i);
      } else if (w[0] == "relations" && w.size() == 1 && s.end == '{') {
        for (++i; i < st.size() && st[i].end != '}'; ++i)
          if (!st[i].text.empty()) rel_texts.emplace_back(st[i].text, st[i].line);
        if (i == st.size()) throw DslError("unterminated relations block", s.line);
        if (!st[i].text.empty()) rel_texts.emplace_back(st[i].text, st[i].line);
      } else {
        throw DslError("unrecognised statement '" + s.text + "'", s.line);
      }
    } catch (const DslError&) {
      throw;
    } catch (const std::exception& e) {
      throw DslError(e.what(), s.line);
    }
  }
  if (!field) throw DslError("no field given", 0);
  if (!p.quiver) throw DslError("no quiver given", 0);
  p.field = *field;
  for (const auto& [t, line] : rel_texts) {
    try {
      p.add(t, params);
    } catch (const std::exception& e) {
      throw DslError(e.what(), line);
    }
  }
  return p;
}

MorphismSpec parse_morphism_spec(const std::string& text) {
  auto st = statements(text);
  static const std::regex header(R"(morphism\s+(\w+)\s*:\s*(\S+)\s*->\s*(\S+))");
  static const std::regex vertex(R"(vertex\s+(\d+)\s*->\s*(\d+))");
  static const std::regex image(R"((\w+)\s*->\s*([\s\S]+))");
  MorphismSpec m;
  std::size_t i = 0;
  while (i < st.size() && st[i].text.empty()) ++i;
  std::smatch g;
  if (i == st.size() || st[i].end != '{' || !std::regex_match(st[i].text, g, header))
    throw DslError("expected 'morphism NAME : SRC -> TGT {'", i < st.size() ? st[i].line : 0);
  m.name = g[1];
  m.source = g[2];
  m.target = g[3];
  for (++i; i < st.size(); ++i) {
    const Stmt& s = st[i];
    if (!s.text.empty()) {
      if (std::regex_match(s.text, g, vertex))
        m.vertex_map.emplace_back(to_int(g[1], s.line), to_int(g[2], s.line));
      else if (std::regex_match(s.text, g, image))
        m.images.emplace_back(g[1], trim(g[2]));
      else
        throw DslError("unrecognised morphism statement '" + s.text + "'", s.line);
    }
    if (s.end == '}') return m;
  }
  throw DslError("unterminated morphism block", st.empty() ? 0 : st.back().line);
}

std::string catalog_text(const std::string& file) {
  for (const auto& [name, text] : embedded_catalog())
    if (name == file) return text;
  throw std::out_of_range("no catalog file " + file);
}

}  // namespace preproj
