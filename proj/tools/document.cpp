#include "document.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

namespace leapcycles::cli {

const char* to_string(Encoding e) noexcept { return e == Encoding::Tuples ? "tuples" : "ints"; }

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

void append_tuple(std::string& out, Word w, unsigned k) {
  for (unsigned i = 0; i < k; ++i) {
    if (i != 0) out.push_back(' ');
    out.push_back(((w >> i) & 1U) != 0 ? '1' : '0');
  }
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

unsigned long long parse_uint(const Token& t, std::size_t line, unsigned long long max) {
  unsigned long long v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || v > max) {
    throw ParseError(line, t.column, "expected an unsigned integer <= " + std::to_string(max) + ", got '" +
                                         std::string(t.text) + "'");
  }
  return v;
}

CycleDocument parse_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }

  const auto header = split(lines.front());
  if (header.empty() || header.front().text != "#") {
    throw ParseError(1, 1, "expected header '# k=<k> h=<h> encoding=<enc> closed=<bool>'");
  }
  CycleDocument doc;
  bool have_k = false, have_h = false, have_enc = false, have_closed = false;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const Token& t = header[i];
    const auto eq = t.text.find('=');
    if (eq == std::string_view::npos) throw ParseError(1, t.column, "expected key=value");
    const auto key = t.text.substr(0, eq);
    const Token value{t.text.substr(eq + 1), t.column + eq + 1};
    if (key == "k") {
      doc.k = static_cast<unsigned>(parse_uint(value, 1, kWordBits));
      have_k = true;
    } else if (key == "h") {
      doc.h = static_cast<unsigned>(parse_uint(value, 1, 1U << 16));
      have_h = true;
    } else if (key == "encoding") {
      if (value.text == "tuples") {
        doc.encoding = Encoding::Tuples;
      } else if (value.text == "ints") {
        doc.encoding = Encoding::Ints;
      } else {
        throw ParseError(1, value.column, "encoding must be 'tuples' or 'ints'");
      }
      have_enc = true;
    } else if (key == "closed") {
      if (value.text != "true" && value.text != "false") {
        throw ParseError(1, value.column, "closed must be 'true' or 'false'");
      }
      doc.closed = value.text == "true";
      have_closed = true;
    } else if (key == "bit0") {
      if (value.text != "leftmost") throw ParseError(1, value.column, "only bit0=leftmost is supported");
    } else {
      throw ParseError(1, t.column, "unknown header field '" + std::string(key) + "'");
    }
  }
  if (!have_k || !have_h || !have_enc || !have_closed) {
    throw ParseError(1, 1, "header must define k, h, encoding and closed");
  }
  if (doc.k == 0) throw ParseError(1, 1, "k must be at least 1");
  if (doc.h == 0) throw ParseError(1, 1, "h must be at least 1");

  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto tokens = split(lines[ln]);
    if (tokens.empty()) continue;
    if (doc.encoding == Encoding::Ints) {
      if (tokens.size() != 1) throw ParseError(line_no, tokens[1].column, "expected one integer per line");
      doc.cycle.push_back(static_cast<Word>(parse_uint(tokens[0], line_no, 0xFFFFFFFFULL)));
    } else {
      if (tokens.size() != doc.k) {
        throw ParseError(line_no, tokens.front().column,
                         "expected " + std::to_string(doc.k) + " coordinates, got " + std::to_string(tokens.size()));
      }
      Word w = 0;
      for (unsigned i = 0; i < doc.k; ++i) {
        if (tokens[i].text != "0" && tokens[i].text != "1") {
          throw ParseError(line_no, tokens[i].column, "coordinate must be 0 or 1");
        }
        if (tokens[i].text == "1") w |= Word{1} << i;
      }
      doc.cycle.push_back(w);
    }
  }
  return doc;
}

CycleDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; map it to line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, "malformed JSON");
  }
  try {
    CycleDocument doc;
    doc.k = j.at("k").get<unsigned>();
    doc.h = j.at("h").get<unsigned>();
    if (doc.k == 0 || doc.k > kWordBits) throw ParseError(1, 1, "k out of range");
    if (doc.h == 0) throw ParseError(1, 1, "h must be at least 1");
    const auto enc = j.at("encoding").get<std::string>();
    doc.closed = j.at("closed").get<bool>();
    if (enc == "ints") {
      doc.encoding = Encoding::Ints;
      for (const auto& v : j.at("cycle")) doc.cycle.push_back(v.get<Word>());
    } else if (enc == "tuples") {
      doc.encoding = Encoding::Tuples;
      for (const auto& t : j.at("cycle")) {
        if (!t.is_array() || t.size() != doc.k) throw ParseError(1, 1, "tuple length must equal k");
        Word w = 0;
        for (unsigned i = 0; i < doc.k; ++i) {
          const int c = t[i].get<int>();
          if (c != 0 && c != 1) throw ParseError(1, 1, "coordinate must be 0 or 1");
          if (c == 1) w |= Word{1} << i;
        }
        doc.cycle.push_back(w);
      }
    } else {
      throw ParseError(1, 1, "encoding must be 'tuples' or 'ints'");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("invalid document: ") + e.what());
  }
}

}  // namespace

std::string write_text(const CycleDocument& doc) {
  std::string out = "# k=" + std::to_string(doc.k) + " h=" + std::to_string(doc.h) +
                    " encoding=" + to_string(doc.encoding) + " closed=" + (doc.closed ? "true" : "false");
  if (doc.encoding == Encoding::Ints) out += " bit0=leftmost";
  out.push_back('\n');
  out.reserve(out.size() + doc.cycle.size() * (doc.encoding == Encoding::Tuples ? 2 * doc.k : 11));
  for (Word w : doc.cycle) {
    if (doc.encoding == Encoding::Tuples) {
      append_tuple(out, w, doc.k);
    } else {
      out += std::to_string(w);
    }
    out.push_back('\n');
  }
  return out;
}

std::string write_json(const CycleDocument& doc) {
  nlohmann::ordered_json j;
  j["k"] = doc.k;
  j["h"] = doc.h;
  j["encoding"] = to_string(doc.encoding);
  j["bit0"] = "leftmost";
  if (doc.encoding == Encoding::Ints) {
    j["cycle"] = doc.cycle;
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (Word w : doc.cycle) {
      auto t = nlohmann::ordered_json::array();
      for (unsigned i = 0; i < doc.k; ++i) t.push_back((w >> i) & 1U);
      arr.push_back(std::move(t));
    }
    j["cycle"] = std::move(arr);
  }
  j["closed"] = doc.closed;
  return j.dump() + "\n";
}

CycleDocument parse_document(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError(1, 1, "empty document");
  if (text[first] == '{') return parse_json(text);
  if (first != 0) {
    // Leading blank lines would shift every line number; the header must come first.
    throw ParseError(1, 1, "document must start with the header line");
  }
  return parse_text(text);
}

}  // namespace leapcycles::cli
