#include "fintop/poset_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fintop {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("poset file, line " + std::to_string(line) + ": " + what);
}

}  // namespace

PosetDocument parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  enum { WantHeader, WantPoints, WantCovers, WantPairs } state = WantHeader;
  std::string name;
  int n = 0;
  std::vector<std::pair<int, int>> covers;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;  // blank
    switch (state) {
      case WantHeader: {
        if (head != "poset") fail(lineno, "expected 'poset <name>'");
        if (!(fields >> name)) fail(lineno, "missing poset name");
        if (std::string extra; fields >> extra) fail(lineno, "poset names are single tokens");
        state = WantPoints;
        break;
      }
      case WantPoints: {
        if (head != "points") fail(lineno, "expected 'points <n>'");
        if (!(fields >> n)) fail(lineno, "missing point count");
        if (std::string extra; fields >> extra) fail(lineno, "trailing tokens after point count");
        state = WantCovers;
        break;
      }
      case WantCovers: {
        if (head != "covers") fail(lineno, "expected 'covers'");
        if (std::string extra; fields >> extra) fail(lineno, "trailing tokens after 'covers'");
        state = WantPairs;
        break;
      }
      case WantPairs: {
        int i = 0, j = 0;
        std::istringstream pair_fields(line);
        if (!(pair_fields >> i >> j)) fail(lineno, "expected a cover pair 'i j'");
        std::string extra;
        if (pair_fields >> extra) fail(lineno, "trailing tokens after cover pair");
        covers.emplace_back(i, j);
        break;
      }
    }
  }
  if (state != WantPairs) throw std::invalid_argument("poset file: truncated header");
  PosetDocument doc;
  doc.name = name;
  doc.poset = FinitePoset::from_covers(n, covers);
  return doc;
}

PosetDocument load_poset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset_text(buffer.str());
}

std::string serialize_poset(const PosetDocument& doc) {
  std::ostringstream out;
  out << "poset " << doc.name << "\n";
  out << "points " << doc.poset.size() << "\n";
  out << "covers\n";
  for (auto [i, j] : doc.poset.cover_pairs()) out << i << " " << j << "\n";
  return out.str();
}

void save_poset_file(const PosetDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << serialize_poset(doc);
}

std::string export_dot(const PosetDocument& doc) {
  const FinitePoset& x = doc.poset;
  std::vector<int> level(x.size(), 0);
  std::vector<int> order(x.size());
  for (int i = 0; i < x.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return x.down_set(a).count() < x.down_set(b).count(); });
  int top = 0;
  for (int v : order) {
    for (int u : x.down_set(v)) level[v] = std::max(level[v], level[u] + 1);
    top = std::max(top, level[v]);
  }
  std::ostringstream out;
  out << "digraph \"" << doc.name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int l = 0; l <= top; ++l) {
    out << "  { rank=same;";
    for (int v = 0; v < x.size(); ++v)
      if (level[v] == l) out << " p" << v << ";";
    out << " }\n";
  }
  for (auto [i, j] : x.cover_pairs()) out << "  p" << i << " -> p" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fintop
