#include "fintop/pi1.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fintop/reduction.hpp"

namespace fintop {

int GroupPresentation::live_generators() const {
  int live = 0;
  for (int g = 0; g < generators; ++g)
    if (alive.empty() || alive[g]) ++live;
  return live;
}

std::vector<int> GroupPresentation::free_reduce(std::vector<int> word) {
  std::vector<int> out;
  for (int letter : word) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

std::vector<int> GroupPresentation::cyclic_reduce(std::vector<int> word) {
  word = free_reduce(std::move(word));
  while (word.size() >= 2 && word.front() == -word.back()) {
    word.erase(word.begin());
    word.pop_back();
  }
  return word;
}

std::vector<int> GroupPresentation::invert(const std::vector<int>& word) {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

GroupPresentation edge_path_presentation(const OrderComplex& k, int basepoint) {
  if (k.empty()) throw std::invalid_argument("empty complex has no fundamental group");
  if (basepoint < 0 || basepoint >= k.vertex_count) throw std::invalid_argument("basepoint out of range");

  std::vector<std::vector<int>> nbr(k.vertex_count);
  if (k.dimension() >= 1)
    for (const auto& e : k.simplices[1]) {
      nbr[e[0]].push_back(e[1]);
      nbr[e[1]].push_back(e[0]);
    }
  for (auto& list : nbr) std::sort(list.begin(), list.end());

  // Breadth-first spanning tree, neighbours visited in index order.
  std::set<std::pair<int, int>> tree;
  std::vector<bool> seen(k.vertex_count, false);
  std::vector<int> queue{basepoint};
  seen[basepoint] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : nbr[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.insert(std::minmax(v, w));
      queue.push_back(w);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("complex is disconnected");

  GroupPresentation p;
  std::map<std::pair<int, int>, int> generator_of;
  if (k.dimension() >= 1)
    for (const auto& e : k.simplices[1]) {
      std::pair<int, int> key{e[0], e[1]};
      if (!tree.count(key)) generator_of[key] = p.generators++;
    }
  p.alive.assign(p.generators, true);

  auto letter = [&](int a, int b) {  // oriented edge a -> b, a < b means +
    auto it = generator_of.find(std::minmax(a, b));
    if (it == generator_of.end()) return 0;  // tree edge
    return a < b ? it->second + 1 : -(it->second + 1);
  };
  if (k.dimension() >= 2)
    for (const auto& t : k.simplices[2]) {
      std::vector<int> word;
      for (int l : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
        if (l != 0) word.push_back(l);
      word = GroupPresentation::free_reduce(std::move(word));
      if (!word.empty()) p.relators.push_back(std::move(word));
    }
  return p;
}

AbelianGroup abelianization(const GroupPresentation& p) {
  std::vector<int> column(p.generators, -1);
  int live = 0;
  for (int g = 0; g < p.generators; ++g)
    if (p.alive.empty() || p.alive[g]) column[g] = live++;
  IntMatrix m(p.relators.size(), std::vector<long long>(live, 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int l : p.relators[r]) {
      int g = std::abs(l) - 1;
      m[r][column[g]] += l > 0 ? 1 : -1;
    }
  SnfResult snf = smith_normal_form(m);
  AbelianGroup a;
  a.rank = live - static_cast<int>(snf.rank());
  for (long long d : snf.diagonal)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

namespace {

using SimplexSets = std::vector<std::set<std::vector<int>>>;

SimplexSets to_sets(const OrderComplex& k) {
  SimplexSets live(k.dimension() + 1);
  for (int d = 0; d <= k.dimension(); ++d)
    live[d] = std::set<std::vector<int>>(k.simplices[d].begin(), k.simplices[d].end());
  return live;
}

// The unique proper coface of sigma when exactly one exists; its
// dimension is forced to dim(sigma)+1 because faces are closed.
std::optional<std::vector<int>> unique_coface(const SimplexSets& live, const std::vector<int>& sigma) {
  std::optional<std::vector<int>> found;
  for (std::size_t d = sigma.size(); d < live.size(); ++d)
    for (const auto& tau : live[d]) {
      if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) continue;
      if (found) return std::nullopt;
      found = tau;
    }
  return found;
}

std::size_t live_count(const SimplexSets& live) {
  std::size_t total = 0;
  for (const auto& level : live) total += level.size();
  return total;
}

}  // namespace

std::optional<CollapseCertificate> try_collapse(const OrderComplex& k) {
  if (k.empty()) return std::nullopt;
  SimplexSets live = to_sets(k);
  CollapseCertificate cert;
  while (live_count(live) > 1) {
    bool collapsed = false;
    for (std::size_t d = 0; d + 1 < live.size() && !collapsed; ++d) {
      for (const auto& sigma : live[d]) {
        auto tau = unique_coface(live, sigma);
        if (!tau) continue;
        cert.steps.push_back({sigma, *tau});
        live[tau->size() - 1].erase(*tau);
        live[d].erase(sigma);
        collapsed = true;
        break;
      }
    }
    if (!collapsed) return std::nullopt;
  }
  if (live[0].size() != 1) return std::nullopt;
  cert.final_vertex = (*live[0].begin())[0];
  return cert;
}

bool replay_collapse(const OrderComplex& k, const CollapseCertificate& cert) {
  if (k.empty()) return false;
  SimplexSets live = to_sets(k);
  for (const auto& step : cert.steps) {
    std::size_t d = step.free_face.size() - 1;
    if (d + 1 >= live.size() || !live[d].count(step.free_face)) return false;
    auto tau = unique_coface(live, step.free_face);
    if (!tau || *tau != step.coface) return false;
    live[tau->size() - 1].erase(*tau);
    live[d].erase(step.free_face);
  }
  return live_count(live) == 1 && live[0].size() == 1 &&
         (*live[0].begin())[0] == cert.final_vertex;
}

namespace {

void normalize(GroupPresentation& p) {
  for (auto& r : p.relators) r = GroupPresentation::cyclic_reduce(std::move(r));
}

void apply_drop(GroupPresentation& p, int relator) {
  p.relators.erase(p.relators.begin() + relator);
}

// g = u^{-1} read off the relator g.u; substitutes and retires g.
void apply_eliminate(GroupPresentation& p, int relator, int generator) {
  std::vector<int> w = p.relators[relator];
  std::size_t at = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (std::abs(w[i]) == generator + 1) at = i;
  if (w[at] < 0) {
    w = GroupPresentation::invert(w);
    at = w.size() - 1 - at;
  }
  std::rotate(w.begin(), w.begin() + at, w.end());
  std::vector<int> u(w.begin() + 1, w.end());
  std::vector<int> u_inv = GroupPresentation::invert(u);
  p.relators.erase(p.relators.begin() + relator);
  for (auto& r : p.relators) {
    std::vector<int> out;
    for (int l : r) {
      if (l == generator + 1) out.insert(out.end(), u_inv.begin(), u_inv.end());
      else if (l == -(generator + 1)) out.insert(out.end(), u.begin(), u.end());
      else out.push_back(l);
    }
    r = GroupPresentation::cyclic_reduce(std::move(out));
  }
  p.alive[generator] = false;
}

std::vector<int> shorten_source_word(const GroupPresentation& p, const TietzeStep& s) {
  std::vector<int> v = p.relators[s.relator];
  if (s.inverted) v = GroupPresentation::invert(v);
  std::rotate(v.begin(), v.begin() + s.rotation, v.end());
  return v;
}

void apply_shorten(GroupPresentation& p, const TietzeStep& s) {
  std::vector<int> v = shorten_source_word(p, s);
  std::vector<int>& t = p.relators[s.target];
  std::vector<int> tail = GroupPresentation::invert(
      std::vector<int>(v.begin() + s.overlap, v.end()));
  std::vector<int> out(t.begin(), t.begin() + s.position);
  out.insert(out.end(), tail.begin(), tail.end());
  out.insert(out.end(), t.begin() + s.position + s.overlap, t.end());
  t = GroupPresentation::cyclic_reduce(std::move(out));
}

bool occurrences_once(const std::vector<int>& word, int generator, int* count_out = nullptr) {
  int count = 0;
  for (int l : word)
    if (std::abs(l) == generator + 1) ++count;
  if (count_out) *count_out = count;
  return count == 1;
}

// First applicable move under the fixed scan order, or nullopt.
std::optional<TietzeStep> next_move(const GroupPresentation& p) {
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i].empty()) {
      TietzeStep s;
      s.kind = TietzeStep::Kind::DropEmptyRelator;
      s.relator = static_cast<int>(i);
      return s;
    }
  // Shortest relator with a once-occurring generator; elimination is the
  // workhorse, shortening below only unblocks it.
  std::optional<TietzeStep> best;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (int g = 0; g < p.generators; ++g) {
      if (!p.alive[g] || !occurrences_once(p.relators[i], g)) continue;
      if (!best || p.relators[i].size() < best_len) {
        TietzeStep s;
        s.kind = TietzeStep::Kind::EliminateGenerator;
        s.relator = static_cast<int>(i);
        s.generator = g;
        best = s;
        best_len = p.relators[i].size();
      }
      break;
    }
  }
  if (best) return best;
  for (std::size_t t = 0; t < p.relators.size(); ++t) {
    for (std::size_t j = 0; j < p.relators.size(); ++j) {
      if (j == t || p.relators[j].empty()) continue;
      std::size_t vlen = p.relators[j].size();
      for (int inverted = 0; inverted < 2; ++inverted) {
        for (std::size_t rot = 0; rot < vlen; ++rot) {
          TietzeStep s;
          s.kind = TietzeStep::Kind::ShortenRelator;
          s.relator = static_cast<int>(j);
          s.target = static_cast<int>(t);
          s.rotation = static_cast<int>(rot);
          s.inverted = inverted == 1;
          std::vector<int> v = shorten_source_word(p, s);
          const std::vector<int>& target = p.relators[t];
          for (std::size_t pos = 0; pos + 1 <= target.size(); ++pos) {
            std::size_t match = 0;
            while (match < v.size() && pos + match < target.size() &&
                   target[pos + match] == v[match])
              ++match;
            if (2 * match > vlen) {
              s.position = static_cast<int>(pos);
              s.overlap = static_cast<int>(match);
              return s;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool replay_tietze(const TietzeTrace& trace) {
  GroupPresentation p = trace.initial;
  if (p.alive.empty()) p.alive.assign(p.generators, true);
  normalize(p);
  for (const auto& s : trace.steps) {
    switch (s.kind) {
      case TietzeStep::Kind::DropEmptyRelator:
        if (s.relator < 0 || s.relator >= static_cast<int>(p.relators.size())) return false;
        if (!p.relators[s.relator].empty()) return false;
        apply_drop(p, s.relator);
        break;
      case TietzeStep::Kind::EliminateGenerator:
        if (s.relator < 0 || s.relator >= static_cast<int>(p.relators.size())) return false;
        if (s.generator < 0 || s.generator >= p.generators || !p.alive[s.generator]) return false;
        if (!occurrences_once(p.relators[s.relator], s.generator)) return false;
        apply_eliminate(p, s.relator, s.generator);
        break;
      case TietzeStep::Kind::ShortenRelator: {
        if (s.relator < 0 || s.relator >= static_cast<int>(p.relators.size())) return false;
        if (s.target < 0 || s.target >= static_cast<int>(p.relators.size())) return false;
        if (s.target == s.relator || p.relators[s.relator].empty()) return false;
        std::vector<int> v = shorten_source_word(p, s);
        const std::vector<int>& target = p.relators[s.target];
        if (s.position < 0 || s.overlap <= 0 ||
            static_cast<std::size_t>(s.position + s.overlap) > target.size())
          return false;
        if (2 * static_cast<std::size_t>(s.overlap) <= v.size()) return false;
        for (int i = 0; i < s.overlap; ++i)
          if (target[s.position + i] != v[i]) return false;
        apply_shorten(p, s);
        break;
      }
    }
  }
  return p.live_generators() == 0;
}

TrivialityResult tietze_trivialize(const GroupPresentation& initial, int budget) {
  GroupPresentation p = initial;
  if (p.alive.empty()) p.alive.assign(p.generators, true);
  normalize(p);
  TietzeTrace trace{initial, {}};
  for (int spent = 0; spent < budget; ++spent) {
    if (p.live_generators() == 0) break;
    auto move = next_move(p);
    if (!move) break;
    switch (move->kind) {
      case TietzeStep::Kind::DropEmptyRelator: apply_drop(p, move->relator); break;
      case TietzeStep::Kind::EliminateGenerator: apply_eliminate(p, move->relator, move->generator); break;
      case TietzeStep::Kind::ShortenRelator: apply_shorten(p, *move); break;
    }
    trace.steps.push_back(*move);
  }
  TrivialityResult r;
  if (p.live_generators() == 0) {
    r.verdict = Verdict::Trivial;
    r.route = TrivialityRoute::Tietze;
    r.tietze = std::move(trace);
  } else {
    r.verdict = Verdict::Unknown;
  }
  return r;
}

TrivialityResult decide_trivial_pi1(const OrderComplex& k, int budget) {
  AbelianGroup h1 = homology(k, true).at(1);
  if (!h1.trivial()) {
    TrivialityResult r;
    r.verdict = Verdict::Nontrivial;
    r.route = TrivialityRoute::Homology;
    r.witness_degree = 1;
    r.witness = h1;
    return r;
  }
  if (auto cert = try_collapse(k)) {
    TrivialityResult r;
    r.verdict = Verdict::Trivial;
    r.route = TrivialityRoute::Collapse;
    r.collapse = std::move(cert);
    return r;
  }
  GroupPresentation initial = edge_path_presentation(k, 0);
  if (initial.live_generators() == 0) {
    TrivialityResult r;
    r.verdict = Verdict::Trivial;
    r.route = TrivialityRoute::EmptyPresentation;
    r.tietze = TietzeTrace{initial, {}};
    return r;
  }
  return tietze_trivialize(initial, budget);
}

TrivialityResult is_homotopically_trivial(const FinitePoset& x, int budget) {
  CoreResult c = core(x);
  if (c.core.size() == 1) {
    TrivialityResult r;
    r.verdict = Verdict::Trivial;
    r.route = TrivialityRoute::Contractible;
    return r;
  }
  OrderComplex k = order_complex(c.core);
  HomologyProfile h = homology(k, true);
  for (int d = 0; d <= h.top_degree(); ++d) {
    if (h.at(d).trivial()) continue;
    TrivialityResult r;
    r.verdict = Verdict::Nontrivial;
    r.route = TrivialityRoute::Homology;
    r.witness_degree = d;
    r.witness = h.at(d);
    return r;
  }
  return decide_trivial_pi1(k, budget);
}

}  // namespace fintop
