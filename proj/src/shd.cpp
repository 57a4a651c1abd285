#include "sfh/shd.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace sfh {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int line = 0;
  int column = 0;
};

std::vector<Token> tokenize_line(std::string_view line, int line_number) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back(Token{line.substr(start, i - start), line_number, static_cast<int>(start) + 1});
  }
  return tokens;
}

[[noreturn]] void fail(const Token& at, const std::string& message) { throw ParseError(at.line, at.column, message); }

int to_int(const Token& token, const char* what) {
  std::string_view s = token.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(token, std::string("expected ") + what + ", found '" + std::string(token.text) + "'");
  return value;
}

class Parser {
 public:
  RawDiagram run(std::string_view text) {
    std::vector<std::vector<Token>> statements;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = text.find('\n', pos);
      const std::string_view line = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      ++line_number;
      auto tokens = tokenize_line(line, line_number);
      if (!tokens.empty()) statements.push_back(std::move(tokens));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (statements.empty()) throw ParseError(1, 1, "empty document; expected header 'shd 1'");
    const auto& header = statements.front();
    if (header.size() != 2 || header[0].text != "shd") fail(header[0], "expected header 'shd 1'");
    if (header[1].text != "1") fail(header[1], "unsupported format version '" + std::string(header[1].text) + "'");

    for (std::size_t s = 1; s < statements.size(); ++s) statement(statements[s]);
    resolve();
    return std::move(raw_);
  }

 private:
  void statement(const std::vector<Token>& t) {
    const std::string_view kind = t[0].text;
    if (kind == "vertex") {
      expect_size(t, 3, "vertex <id> crossing|marker");
      Vertex v;
      v.id = to_int(t[1], "vertex id");
      if (t[2].text == "crossing") {
        v.kind = VertexKind::crossing;
      } else if (t[2].text == "marker") {
        v.kind = VertexKind::marker;
      } else {
        fail(t[2], "expected 'crossing' or 'marker'");
      }
      if (!vertex_ids_.insert(v.id).second) fail(t[1], "duplicate vertex " + std::to_string(v.id));
      raw_.vertices.push_back(v);
    } else if (kind == "edge") {
      expect_size(t, 6, "edge <id> alpha|beta|bd <index> <tail> <head>");
      Edge e;
      e.id = to_int(t[1], "edge id");
      if (t[2].text == "alpha") {
        e.label.kind = CurveKind::alpha;
      } else if (t[2].text == "beta") {
        e.label.kind = CurveKind::beta;
      } else if (t[2].text == "bd") {
        e.label.kind = CurveKind::boundary;
      } else {
        fail(t[2], "expected 'alpha', 'beta' or 'bd'");
      }
      e.label.index = to_int(t[3], "curve index");
      e.tail = to_int(t[4], "tail vertex id");
      e.head = to_int(t[5], "head vertex id");
      if (!edge_ids_.insert(e.id).second) fail(t[1], "duplicate edge " + std::to_string(e.id));
      edge_tokens_.push_back({&t[4], &t[5]});
      raw_.edges.push_back(e);
    } else if (kind == "region") {
      if (t.size() < 6 || t[2].text != "genus" || t[4].text != "cycle")
        fail(t[0], "expected 'region <id> genus <g> cycle <edges>...'");
      Region r;
      r.id = to_int(t[1], "region id");
      r.genus = to_int(t[3], "genus");
      std::vector<const Token*> refs;
      for (std::size_t i = 4; i < t.size(); ++i) {
        if (t[i].text == "cycle") {
          if (i + 1 >= t.size() || t[i + 1].text == "cycle") fail(t[i], "empty cycle");
          r.cycles.emplace_back();
          continue;
        }
        const int signed_id = to_int(t[i], "signed edge id");
        if (signed_id == 0) fail(t[i], "edge reference 0 is not allowed");
        r.cycles.back().push_back(EdgeRef{signed_id < 0 ? -signed_id : signed_id, signed_id > 0});
        refs.push_back(&t[i]);
      }
      if (!region_ids_.insert(r.id).second) fail(t[1], "duplicate region " + std::to_string(r.id));
      region_tokens_.push_back(std::move(refs));
      raw_.regions.push_back(std::move(r));
    } else if (kind == "name") {
      if (t.size() < 2) fail(t[0], "expected 'name <text>'");
      std::string name;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (i > 1) name += ' ';
        name += t[i].text;
      }
      raw_.metadata.name = std::move(name);
    } else if (kind == "expect") {
      expect_size(t, 3, "expect <key> <value>");
      raw_.metadata.expectations[std::string(t[1].text)] = std::string(t[2].text);
    } else {
      fail(t[0], "unknown statement '" + std::string(kind) + "'");
    }
  }

  static void expect_size(const std::vector<Token>& t, std::size_t n, const char* form) {
    if (t.size() != n) fail(t[0], std::string("expected '") + form + "'");
  }

  void resolve() {
    for (std::size_t i = 0; i < raw_.edges.size(); ++i) {
      const Edge& e = raw_.edges[i];
      if (!vertex_ids_.contains(e.tail))
        fail(*edge_tokens_[i].first,
             "edge " + std::to_string(e.id) + " cites unknown vertex " + std::to_string(e.tail));
      if (!vertex_ids_.contains(e.head))
        fail(*edge_tokens_[i].second,
             "edge " + std::to_string(e.id) + " cites unknown vertex " + std::to_string(e.head));
    }
    for (std::size_t i = 0; i < raw_.regions.size(); ++i) {
      std::size_t k = 0;
      for (const Cycle& c : raw_.regions[i].cycles) {
        for (const EdgeRef& ref : c) {
          if (!edge_ids_.contains(ref.edge))
            fail(*region_tokens_[i][k], "region " + std::to_string(raw_.regions[i].id) + " cites unknown edge " +
                                            std::to_string(ref.edge));
          ++k;
        }
      }
    }
  }

  RawDiagram raw_;
  std::set<int> vertex_ids_, edge_ids_, region_ids_;
  std::vector<std::pair<const Token*, const Token*>> edge_tokens_;
  std::vector<std::vector<const Token*>> region_tokens_;
};

const char* kind_word(CurveKind kind) {
  switch (kind) {
    case CurveKind::alpha:
      return "alpha";
    case CurveKind::beta:
      return "beta";
    case CurveKind::boundary:
      return "bd";
  }
  return "?";
}

}  // namespace

RawDiagram parse_raw(std::string_view text) { return Parser().run(text); }

Diagram parse(std::string_view text) { return validate(parse_raw(text)); }

std::string serialize(const Diagram& diagram) {
  std::ostringstream out;
  out << "shd 1\n";
  out << "# alpha " << diagram.d_alpha() << " beta " << diagram.d_beta() << " boundary " << diagram.boundary_count()
      << " euler " << euler_characteristic(diagram) << '\n';
  const Metadata& meta = diagram.metadata();
  if (!meta.name.empty()) out << "name " << meta.name << '\n';
  for (const auto& [key, value] : meta.expectations) out << "expect " << key << ' ' << value << '\n';

  out << "# vertices " << diagram.vertices().size() << '\n';
  for (const Vertex& v : diagram.vertices())
    out << "vertex " << v.id << ' ' << (v.kind == VertexKind::crossing ? "crossing" : "marker") << '\n';
  out << "# edges " << diagram.edges().size() << '\n';
  for (const Edge& e : diagram.edges())
    out << "edge " << e.id << ' ' << kind_word(e.label.kind) << ' ' << e.label.index << ' ' << e.tail << ' ' << e.head
        << '\n';
  out << "# regions " << diagram.regions().size() << '\n';
  for (const Region& r : diagram.regions()) {
    out << "region " << r.id << " genus " << r.genus;
    for (const Cycle& c : r.cycles) {
      out << " cycle";
      for (const EdgeRef& ref : c) out << ' ' << (ref.forward ? "" : "-") << ref.edge;
    }
    out << '\n';
  }
  return out.str();
}

std::string canonicalize(std::string_view text) { return serialize(parse(text)); }

std::string read_text(const std::filesystem::path& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return buffer.str();
}

Diagram load_diagram(const std::filesystem::path& path) { return parse(read_text(path)); }

}  // namespace sfh
