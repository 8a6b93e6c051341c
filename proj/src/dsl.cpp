#include "legendra/dsl.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "legendra/error.hpp"

namespace legendra {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::optional<long> to_int(std::string_view s) {
  long v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

int expect_int(const Token& t, int line, bool positive) {
  auto v = to_int(t.text);
  if (!v || (positive && *v <= 0)) {
    throw Error(ErrorKind::SyntaxError,
                std::string(positive ? "expected a positive integer, got '" : "expected an integer, got '") +
                    std::string(t.text) + "'",
                line, t.column);
  }
  return static_cast<int>(*v);
}

Event parse_event(const Token& t, int line) {
  if (t.text.size() < 2) throw Error(ErrorKind::SyntaxError, "bad event token '" + std::string(t.text) + "'", line, t.column);
  Event e;
  switch (t.text[0]) {
    case 'L': e = left_cusp(0); break;
    case 'R': e = right_cusp(0); break;
    case 'X': e = crossing(0); break;
    default:
      throw Error(ErrorKind::SyntaxError, "bad event token '" + std::string(t.text) + "'", line, t.column);
  }
  auto v = to_int(t.text.substr(1));
  if (!v || *v <= 0) {
    throw Error(ErrorKind::SyntaxError, "bad event position in '" + std::string(t.text) + "'", line, t.column);
  }
  e.pos = static_cast<int>(*v);
  return e;
}

OrientationMarker parse_marker(const Token& t, int line) {
  OrientationMarker m;
  m.line = line;
  m.column = t.column;
  auto bad = [&](const char* why) {
    return Error(ErrorKind::SyntaxError, std::string(why) + " in marker '" + std::string(t.text) + "'", line, t.column);
  };
  auto eq = t.text.find('=');
  if (eq == std::string_view::npos || eq + 2 != t.text.size()) throw bad("expected <marker>=+ or <marker>=-");
  char s = t.text[eq + 1];
  if (s != '+' && s != '-') throw bad("expected + or -");
  m.sign = s == '+' ? 1 : -1;
  std::string_view head = t.text.substr(0, eq);
  if (head.substr(0, 4) == "port") {
    auto v = to_int(head.substr(4));
    if (!v || *v <= 0) throw bad("bad port number");
    m.on_port = true;
    m.port = static_cast<int>(*v);
    return m;
  }
  if (head.substr(0, 2) == "ev") {
    auto dot = head.find('.');
    if (dot == std::string_view::npos) throw bad("expected ev<j>.<i>");
    auto j = to_int(head.substr(2, dot - 2));
    auto i = to_int(head.substr(dot + 1));
    if (!j || !i || *j <= 0 || *i <= 0) throw bad("bad event marker");
    m.event = static_cast<int>(*j);
    m.position = static_cast<int>(*i);
    return m;
  }
  throw bad("unknown marker");
}

}  // namespace

RawDiagram parse_raw(std::string_view text) {
  RawDiagram raw;
  bool seen_handles = false, seen_ports = false, seen_wraps = false, seen_word = false, seen_orient = false;
  int line_no = 0;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t nl = text.find('\n', at);
    std::string_view line = text.substr(at, nl == std::string_view::npos ? std::string_view::npos : nl - at);
    at = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split(line);
    if (toks.empty()) continue;

    const Token& key = toks.front();
    auto dup = [&](bool& flag) {
      if (flag) throw Error(ErrorKind::SyntaxError, "duplicate '" + std::string(key.text) + "' line", line_no, key.column);
      flag = true;
    };
    if (key.text != "handles" && !seen_handles) {
      throw Error(ErrorKind::SyntaxError, "first line must be 'handles <h>'", line_no, key.column);
    }
    if (key.text == "handles") {
      dup(seen_handles);
      if (toks.size() != 2) throw Error(ErrorKind::SyntaxError, "expected 'handles <h>'", line_no, key.column);
      auto v = to_int(toks[1].text);
      if (!v || *v < 0) throw Error(ErrorKind::SyntaxError, "bad handle count", line_no, toks[1].column);
      raw.handles = static_cast<int>(*v);
    } else if (key.text == "ports") {
      dup(seen_ports);
      raw.ports_line = line_no;
      for (std::size_t k = 1; k < toks.size(); ++k) raw.ports.push_back(expect_int(toks[k], line_no, false));
    } else if (key.text == "wraps") {
      dup(seen_wraps);
      raw.wraps_line = line_no;
      for (std::size_t k = 1; k < toks.size(); ++k) raw.wraps.push_back(expect_int(toks[k], line_no, false));
    } else if (key.text == "word") {
      dup(seen_word);
      raw.word_line = line_no;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        raw.word.push_back(parse_event(toks[k], line_no));
        raw.word_columns.push_back(toks[k].column);
      }
    } else if (key.text == "orient") {
      dup(seen_orient);
      for (std::size_t k = 1; k < toks.size(); ++k) raw.markers.push_back(parse_marker(toks[k], line_no));
    } else {
      throw Error(ErrorKind::SyntaxError, "unknown keyword '" + std::string(key.text) + "'", line_no, key.column);
    }
  }
  if (!seen_handles) throw Error(ErrorKind::SyntaxError, "missing 'handles' line", line_no, 1);
  return raw;
}

FrontDiagram parse(std::string_view text) { return validate(parse_raw(text)); }

std::string print(const FrontDiagram& d) {
  std::ostringstream out;
  out << "handles " << d.handles() << '\n';
  if (d.handles() > 0) {
    out << "ports";
    for (int b : d.ports()) out << ' ' << b;
    out << '\n';
  }
  if (d.edge_count() > 0) {
    out << "wraps";
    for (int w : d.wraps()) out << ' ' << w;
    out << '\n';
  }
  out << "word";
  for (const Event& e : d.word()) out << ' ' << token(e);
  out << '\n';

  out << "orient";
  const auto& comps = d.components();
  const auto sign = [](int dir) { return dir > 0 ? '+' : '-'; };
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int cid = static_cast<int>(c);
    std::optional<int> port;
    for (int k = 1; k <= d.edge_count(); ++k) {
      if (d.component_of(0, k) == cid) {
        port = k;
        break;
      }
    }
    if (port) {
      out << " port" << *port << '=' << sign(d.dir(0, *port));
      continue;
    }
    for (std::size_t j = 0; j < d.word().size(); ++j) {
      const Event& e = d.word()[j];
      const std::size_t state = e.kind == EventKind::LeftCusp ? j + 1 : j;
      int pos = 0;
      if (d.component_of(state, e.pos) == cid) pos = e.pos;
      else if (d.component_of(state, e.pos + 1) == cid) pos = e.pos + 1;
      if (pos == 0) continue;
      out << " ev" << (j + 1) << '.' << pos << '=' << sign(d.dir(state, pos));
      break;
    }
  }
  out << '\n';
  return out.str();
}

}  // namespace legendra
