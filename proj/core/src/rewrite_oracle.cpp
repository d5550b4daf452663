#include "gael/rewrite_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gael {

namespace {

void add_term(AlgebraElement& element, const NormalFormWord& w, const mpq_class& coeff) {
  auto [it, inserted] = element.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) element.erase(it);
  } else if (it->second == 0) {
    element.erase(it);
  }
}

// does p occur as an initial segment of q (trivial p: source match only)?
bool is_prefix(const Path& p, const Path& q) {
  if (p.source != q.source || p.edges.size() > q.edges.size()) return false;
  return std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
}

}  // namespace

bool WordOrder::operator()(const NormalFormWord& a, const NormalFormWord& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  if (a.lambda.length() != b.lambda.length()) return a.lambda.length() < b.lambda.length();
  if (a.lambda.source != b.lambda.source) return a.lambda.source < b.lambda.source;
  if (a.lambda.edges != b.lambda.edges) return a.lambda.edges < b.lambda.edges;
  if (a.mu.source != b.mu.source) return a.mu.source < b.mu.source;
  return a.mu.edges < b.mu.edges;
}

SpecialEdgeChoice CohnOracle::default_choice(const Graph& g, std::span<const int> x) {
  SpecialEdgeChoice choice;
  choice.gamma.assign(g.vertex_count(), -1);
  for (int v : x) choice.gamma[v] = g.out_edges()[v].front();
  return choice;
}

CohnOracle::CohnOracle(Graph g, std::vector<int> x, size_t max_words)
    : graph_(std::move(g)), x_(std::move(x)), cap_(max_words) {
  for (int v : x_)
    if (v < 0 || v >= graph_.vertex_count() || graph_.out_edges()[v].empty())
      throw std::invalid_argument("oracle: X must consist of regular vertices");
  choice_ = default_choice(graph_, x_);
  init();
}

CohnOracle::CohnOracle(Graph g, std::vector<int> x, SpecialEdgeChoice choice, size_t max_words)
    : graph_(std::move(g)), x_(std::move(x)), choice_(std::move(choice)), cap_(max_words) {
  init();
}

void CohnOracle::init() {
  in_x_.assign(graph_.vertex_count(), 0);
  for (int v : x_) {
    if (v < 0 || v >= graph_.vertex_count())
      throw std::invalid_argument("oracle: X contains an unknown vertex index");
    if (graph_.out_edges()[v].empty())
      throw std::invalid_argument("oracle: X contains a sink");
    in_x_[v] = 1;
  }
  if (static_cast<int>(choice_.gamma.size()) != graph_.vertex_count())
    throw std::invalid_argument("oracle: special-edge choice has wrong size");
  for (int v : x_) {
    const int e = choice_.gamma[v];
    if (e < 0 || e >= graph_.edge_count() || graph_.edge_source(e) != v)
      throw std::invalid_argument("oracle: special edge not emitted by its vertex");
  }
  paths_.clear();
  paths_at_.clear();
  ensure_paths(0);
}

void CohnOracle::ensure_paths(unsigned len) const {
  if (paths_.empty()) {
    std::vector<Path> trivial;
    std::vector<std::vector<int>> at(graph_.vertex_count());
    for (int v = 0; v < graph_.vertex_count(); ++v) {
      at[v].push_back(static_cast<int>(trivial.size()));
      trivial.push_back({v, v, {}});
    }
    paths_.push_back(std::move(trivial));
    paths_at_.push_back(std::move(at));
  }
  while (paths_.size() <= len) {
    const auto& prev = paths_.back();
    std::vector<Path> next;
    std::vector<std::vector<int>> at(graph_.vertex_count());
    for (const Path& p : prev)
      for (int e : graph_.out_edges()[p.range]) {
        at[graph_.edge_range(e)].push_back(static_cast<int>(next.size()));
        next.push_back(extend(p, e));
      }
    paths_.push_back(std::move(next));
    paths_at_.push_back(std::move(at));
  }
}

size_t CohnOracle::pair_count_exact(unsigned weight) const {
  ensure_paths(weight);
  size_t total = 0;
  for (unsigned s = 0; s <= weight; ++s)
    for (int v = 0; v < graph_.vertex_count(); ++v)
      total += paths_at_[s][v].size() * paths_at_[weight - s][v].size();
  return total;
}

Path CohnOracle::chop(const Path& p) const {
  Path out = p;
  const int last = out.edges.back();
  out.edges.pop_back();
  out.range = graph_.edge_source(last);
  return out;
}

Path CohnOracle::extend(const Path& p, int edge) const {
  Path out = p;
  out.edges.push_back(edge);
  out.range = graph_.edge_range(edge);
  return out;
}

bool CohnOracle::reducible(const NormalFormWord& w) const {
  if (w.lambda.trivial() || w.mu.trivial()) return false;
  const int e = w.lambda.edges.back();
  if (e != w.mu.edges.back()) return false;
  const int v = graph_.edge_source(e);
  return in_x_[v] && choice_.gamma[v] == e;
}

std::vector<NormalFormWord> CohnOracle::enumerate_spanning(unsigned k) const {
  size_t total = 0;
  for (unsigned w = 0; w <= k; ++w) {
    total += pair_count_exact(w);
    if (total > cap_)
      throw std::runtime_error("oracle: instance too large (spanning words exceed cap)");
  }
  std::vector<NormalFormWord> words;
  words.reserve(total);
  for (unsigned w = 0; w <= k; ++w)
    for (unsigned s = 0; s <= w; ++s)
      for (int v = 0; v < graph_.vertex_count(); ++v)
        for (int li : paths_at_[s][v])
          for (int mi : paths_at_[w - s][v])
            words.push_back({paths_[s][li], paths_[w - s][mi]});
  std::sort(words.begin(), words.end(), [](const NormalFormWord& a, const NormalFormWord& b) {
    return WordOrder{}(a, b);
  });
  return words;
}

AlgebraElement CohnOracle::reduce(AlgebraElement element) const {
  AlgebraElement out;
  while (!element.empty()) {
    auto it = std::prev(element.end());  // maximal-weight word first
    const NormalFormWord w = it->first;
    const mpq_class c = it->second;
    element.erase(it);
    if (c == 0) continue;
    if (!reducible(w)) {
      add_term(out, w, c);
      continue;
    }
    const int gamma = w.lambda.edges.back();
    const int v = graph_.edge_source(gamma);
    const NormalFormWord base{chop(w.lambda), chop(w.mu)};
    add_term(element, base, c);
    for (int f : graph_.out_edges()[v]) {
      if (f == gamma) continue;
      add_term(element, {extend(base.lambda, f), extend(base.mu, f)}, -c);
    }
  }
  return out;
}

AlgebraElement CohnOracle::single(NormalFormWord w, const mpq_class& coeff) {
  AlgebraElement e;
  if (coeff != 0) e.emplace(std::move(w), coeff);
  return e;
}

AlgebraElement CohnOracle::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [w1, c1] : a) {
    for (const auto& [w2, c2] : b) {
      // (lambda1 mu1*)(lambda2 mu2*): CK1 collapses mu1* lambda2 unless one
      // path is an initial segment of the other.
      const Path& mu1 = w1.mu;
      const Path& lambda2 = w2.lambda;
      if (is_prefix(mu1, lambda2)) {
        Path tail{mu1.range, lambda2.range,
                  {lambda2.edges.begin() + static_cast<long>(mu1.length()), lambda2.edges.end()}};
        Path left = w1.lambda;
        left.edges.insert(left.edges.end(), tail.edges.begin(), tail.edges.end());
        left.range = tail.range;
        add_term(out, {std::move(left), w2.mu}, c1 * c2);
      } else if (is_prefix(lambda2, mu1)) {
        Path tail{lambda2.range, mu1.range,
                  {mu1.edges.begin() + static_cast<long>(lambda2.length()), mu1.edges.end()}};
        Path right = w2.mu;
        right.edges.insert(right.edges.end(), tail.edges.begin(), tail.edges.end());
        right.range = tail.range;
        add_term(out, {w1.lambda, std::move(right)}, c1 * c2);
      }
      // otherwise the ghost/real splice is zero
    }
  }
  return reduce(std::move(out));
}

std::vector<NormalFormWord> CohnOracle::irreducible_words(unsigned max_weight) const {
  std::vector<NormalFormWord> out;
  for (const NormalFormWord& w : enumerate_spanning(max_weight))
    if (!reducible(w)) out.push_back(w);
  return out;
}

mpz_class CohnOracle::graded_dim_bruteforce(unsigned k, bool strong) const {
  if (pair_count_exact(k) > cap_)
    throw std::runtime_error("oracle: instance too large (spanning words exceed cap)");
  mpz_class count = 0;
  for (unsigned s = 0; s <= k; ++s)
    for (int v = 0; v < graph_.vertex_count(); ++v)
      for (int li : paths_at_[s][v])
        for (int mi : paths_at_[k - s][v]) {
          const NormalFormWord w{paths_[s][li], paths_[k - s][mi]};
          if (!reducible(w)) ++count;
        }

  if (strong) {
    for (const NormalFormWord& w : enumerate_spanning(k)) {
      if (!reducible(w)) continue;
      const AlgebraElement normal = reduce(single(w));
      for (const auto& [nw, coeff] : normal) {
        (void)coeff;
        if (reducible(nw))
          throw std::logic_error("oracle: reduce left a reducible word");
        if (nw.weight() > w.weight())
          throw std::logic_error("oracle: reduce raised the weight of " + word_to_string(w));
      }
    }
  }
  return count;
}

ClosureReport CohnOracle::product_closure_check(unsigned n, unsigned m) const {
  const auto left = irreducible_words(n);
  const auto right = irreducible_words(m);
  ClosureReport report;
  report.ok = true;
  for (const NormalFormWord& a : left)
    for (const NormalFormWord& b : right) {
      const AlgebraElement prod = multiply(single(a), single(b));
      for (const auto& [w, coeff] : prod) {
        (void)coeff;
        if (w.weight() > n + m) {
          report.ok = false;
          if (report.violations.size() < 8)
            report.violations.push_back(word_to_string(a) + " * " + word_to_string(b) +
                                        " -> " + word_to_string(w));
        }
      }
    }
  return report;
}

std::string CohnOracle::word_to_string(const NormalFormWord& w) const {
  auto path_str = [this](const Path& p) {
    if (p.trivial()) return graph_.vertices()[p.source];
    std::string s;
    for (size_t i = 0; i < p.edges.size(); ++i) {
      if (i) s += ' ';
      s += graph_.edges()[p.edges[i]].name;
    }
    return s;
  };
  if (w.lambda.trivial() && w.mu.trivial()) return path_str(w.lambda);
  return "(" + path_str(w.lambda) + ")(" + path_str(w.mu) + ")*";
}

ChoiceIndependenceReport choice_independence_check(const Graph& g, std::vector<int> x,
                                                   unsigned k, size_t max_words) {
  // enumerate every assignment v -> gamma_v over v in X
  std::vector<std::vector<int>> options;
  for (int v : x) options.push_back(g.out_edges()[v]);
  size_t combos = 1;
  for (const auto& o : options) {
    combos *= o.size();
    if (combos > 4096)
      throw std::runtime_error("choice independence: too many special-edge choices");
  }

  ChoiceIndependenceReport report;
  std::vector<std::vector<mpz_class>> counts;  // per choice, per weight
  std::vector<size_t> pick(options.size(), 0);
  for (size_t c = 0; c < combos; ++c) {
    SpecialEdgeChoice choice;
    choice.gamma.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < x.size(); ++i) choice.gamma[x[i]] = options[i][pick[i]];
    const CohnOracle oracle(g, x, choice, max_words);
    std::vector<mpz_class> per_weight;
    for (unsigned w = 0; w <= k; ++w) per_weight.push_back(oracle.graded_dim_bruteforce(w));
    counts.push_back(std::move(per_weight));
    for (size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
  }
  report.choices_checked = combos;
  report.ok = true;
  for (size_t c = 1; c < counts.size(); ++c)
    if (counts[c] != counts[0]) {
      report.ok = false;
      report.detail = "choice " + std::to_string(c) + " disagrees with the default";
      break;
    }
  return report;
}

}  // namespace gael
