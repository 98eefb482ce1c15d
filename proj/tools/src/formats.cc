// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pregeo_cli/formats.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pregeo/constructors.h"
#include "pregeo/errors.h"

namespace pregeo::cli {
namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string w; in >> w;) line.words.push_back(w);
    if (line.words.empty() || line.words[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t Number(const Line& line, const std::string& word) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line.number, "expected a non-negative integer, got '" +
                                      word + "'");
  }
  return value;
}

Element Index(const Line& line, const std::string& word, std::size_t bound) {
  const std::uint64_t value = Number(line, word);
  if (value >= bound) {
    throw ParseError(line.number, "index " + word + " out of range for size " +
                                      std::to_string(bound));
  }
  return static_cast<Element>(value);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(Tokenize(text)) {}

  const Line& Next(const char* expecting) {
    if (i_ >= lines_.size()) {
      const int last = lines_.empty() ? 1 : lines_.back().number;
      throw ParseError(last, std::string("unexpected end of file, expected ") +
                                 expecting);
    }
    return lines_[i_++];
  }
  // Next line must be `keyword` followed by exactly `args` words.
  const Line& Expect(const std::string& keyword, std::size_t args) {
    const Line& line = Next(keyword.c_str());
    if (line.words[0] != keyword || line.words.size() != args + 1) {
      throw ParseError(line.number, "expected '" + keyword + "' with " +
                                        std::to_string(args) + " argument(s)");
    }
    return line;
  }
  void ExpectEnd() {
    if (i_ < lines_.size()) {
      throw ParseError(lines_[i_].number, "trailing content after 'end'");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t i_ = 0;
};

void ExpectHeader(Cursor& cursor, const char* magic) {
  const Line& line = cursor.Next("header");
  if (line.words.size() != 2 || line.words[0] != magic) {
    throw ParseError(line.number, std::string("expected header '") + magic +
                                      " v1'");
  }
  if (line.words[1] != "v1") {
    throw ParseError(line.number, "unsupported version " + line.words[1]);
  }
}

}  // namespace

MatroidFile ParseMatroidFile(std::string_view text) {
  Cursor cursor(text);
  ExpectHeader(cursor, "pregeometry");
  MatroidFile file;
  {
    const Line& line = cursor.Expect("ground", 1);
    file.ground = Number(line, line.words[1]);
    if (file.ground == 0) throw ParseError(line.number, "ground must be >= 1");
  }
  const Line& kind = cursor.Next("kind");
  if (kind.words[0] != "kind" || kind.words.size() < 2) {
    throw ParseError(kind.number, "expected 'kind <name> ...'");
  }
  const std::string& name = kind.words[1];
  const std::size_t args = kind.words.size() - 2;
  if (name == "explicit") {
    if (args != 0) throw ParseError(kind.number, "explicit takes no arguments");
    file.kind = MatroidKind::kExplicit;
    cursor.Expect("flats", 0);
    for (;;) {
      const Line& line = cursor.Next("'end'");
      if (line.words[0] == "end") {
        if (line.words.size() != 1) {
          throw ParseError(line.number, "'end' takes no arguments");
        }
        break;
      }
      ElementSet flat;
      if (!(line.words.size() == 1 && line.words[0] == "-")) {
        for (const std::string& w : line.words) {
          flat.Insert(Index(line, w, file.ground));
        }
      }
      file.flats.push_back(std::move(flat));
    }
    std::sort(file.flats.begin(), file.flats.end());
    file.flats.erase(std::unique(file.flats.begin(), file.flats.end()),
                     file.flats.end());
  } else if (name == "linear" || name == "affine") {
    if (args != 2) throw ParseError(kind.number, name + " takes <q> <d>");
    file.kind = name == "linear" ? MatroidKind::kLinear : MatroidKind::kAffine;
    file.q = static_cast<std::uint32_t>(Number(kind, kind.words[2]));
    file.d = static_cast<std::uint32_t>(Number(kind, kind.words[3]));
    const FieldSpec spec{file.q, file.d};
    try {
      spec.Validate();
    } catch (const Error& e) {
      throw ParseError(kind.number, e.what());
    }
    if (spec.Size() != file.ground) {
      throw ParseError(kind.number, "GF(" + std::to_string(file.q) + ")^" +
                                        std::to_string(file.d) + " has " +
                                        std::to_string(spec.Size()) +
                                        " vectors, ground is " +
                                        std::to_string(file.ground));
    }
  } else if (name == "trivial") {
    file.kind = MatroidKind::kTrivial;
    for (std::size_t i = 2; i < kind.words.size(); ++i) {
      file.loops.Insert(Index(kind, kind.words[i], file.ground));
    }
  } else if (name == "subgroup") {
    if (args != 1) throw ParseError(kind.number, "subgroup takes <groupfile>");
    file.kind = MatroidKind::kSubgroup;
    file.group_path = kind.words[2];
  } else {
    throw ParseError(kind.number, "unknown kind '" + name + "'");
  }
  cursor.ExpectEnd();
  return file;
}

std::string SerializeMatroidFile(const MatroidFile& file) {
  std::ostringstream out;
  out << "pregeometry v1\nground " << file.ground << "\nkind ";
  switch (file.kind) {
    case MatroidKind::kExplicit: {
      out << "explicit\nflats\n";
      std::vector<ElementSet> flats = file.flats;
      std::sort(flats.begin(), flats.end());
      flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
      for (const ElementSet& f : flats) {
        if (f.Empty()) {
          out << "-\n";
          continue;
        }
        bool first = true;
        for (Element x : f) {
          out << (first ? "" : " ") << x;
          first = false;
        }
        out << '\n';
      }
      out << "end\n";
      break;
    }
    case MatroidKind::kLinear:
    case MatroidKind::kAffine:
      out << (file.kind == MatroidKind::kLinear ? "linear " : "affine ")
          << file.q << ' ' << file.d << '\n';
      break;
    case MatroidKind::kTrivial:
      out << "trivial";
      for (Element x : file.loops) out << ' ' << x;
      out << '\n';
      break;
    case MatroidKind::kSubgroup:
      out << "subgroup " << file.group_path << '\n';
      break;
  }
  return out.str();
}

FiniteGroup ParseGroupFile(std::string_view text) {
  Cursor cursor(text);
  ExpectHeader(cursor, "group");
  const Line& order_line = cursor.Expect("order", 1);
  const std::size_t n = Number(order_line, order_line.words[1]);
  if (n == 0) throw ParseError(order_line.number, "order must be >= 1");
  if (n > 4096) throw ParseError(order_line.number, "order exceeds 4096");
  cursor.Expect("table", 0);
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    const Line& line = cursor.Next("table row");
    if (line.words.size() != n) {
      throw ParseError(line.number, "table row needs " + std::to_string(n) +
                                        " entries, got " +
                                        std::to_string(line.words.size()));
    }
    for (const std::string& w : line.words) table.push_back(Index(line, w, n));
  }
  cursor.Expect("end", 0);
  cursor.ExpectEnd();
  return FiniteGroup::FromTable(n, std::move(table));
}

std::string SerializeGroupFile(const FiniteGroup& group) {
  std::ostringstream out;
  const std::size_t n = group.order();
  out << "group v1\norder " << n << "\ntable\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      out << (y == 0 ? "" : " ") << group.Mul(x, y);
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ClosureTable BuildTable(const MatroidFile& file,
                        const std::filesystem::path& base_dir) {
  switch (file.kind) {
    case MatroidKind::kExplicit:
      return ExplicitFromFlats(file.ground, file.flats);
    case MatroidKind::kLinear:
      return LinearMatroid({file.q, file.d});
    case MatroidKind::kAffine:
      return AffineMatroid({file.q, file.d});
    case MatroidKind::kTrivial:
      return TrivialPregeometry(file.ground, file.loops);
    case MatroidKind::kSubgroup: {
      std::filesystem::path p(file.group_path);
      if (p.is_relative()) p = base_dir / p;
      const FiniteGroup g = LoadGroup(p);
      if (g.order() != file.ground) {
        throw InputError("group order " + std::to_string(g.order()) +
                         " differs from ground " + std::to_string(file.ground));
      }
      return SubgroupClosure(g);
    }
  }
  throw InputError("unknown matroid kind");
}

ClosureTable LoadMatroid(const std::filesystem::path& path) {
  return BuildTable(ParseMatroidFile(ReadFile(path)), path.parent_path());
}

FiniteGroup LoadGroup(const std::filesystem::path& path) {
  return ParseGroupFile(ReadFile(path));
}

}  // namespace pregeo::cli
