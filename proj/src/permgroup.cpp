#include "symarr/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

#include "symarr/errors.hpp"

namespace symarr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::InvalidPermutation, "image array is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j) {
    if (images_[static_cast<std::size_t>(j)] != j) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int j = 0; j < size(); ++j) inv[static_cast<std::size_t>(images_[j])] = j;
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    int j = start;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidPermutation, "composing permutations of different degree");
  }
  std::vector<int> im(b.images_.size());
  for (std::size_t j = 0; j < im.size(); ++j) im[j] = a.images_[b.images_[j]];
  return Permutation(std::move(im));
}

namespace {

std::vector<int> parse_labels(std::string_view body, int n, std::string_view whole) {
  std::vector<int> labels;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError,
                  "unexpected character '" + std::string(1, c) + "' in \"" + std::string(whole) + "\"");
    }
    long value = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      value = value * 10 + (body[i] - '0');
      if (value > 1'000'000) break;
      ++i;
    }
    if (value < 1 || value > n) {
      throw Error(ErrorKind::InvalidPermutation,
                  "label " + std::to_string(value) + " outside 1.." + std::to_string(n) + " in \"" +
                      std::string(whole) + "\"");
    }
    labels.push_back(static_cast<int>(value) - 1);
  }
  return labels;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  if (n < 0) throw Error(ErrorKind::ParseError, "negative point count");
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view s = text.substr(b, e - b);

  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorKind::ParseError, "unterminated one-line notation");
    std::vector<int> im = parse_labels(s.substr(1, s.size() - 2), n, s);
    if (static_cast<int>(im.size()) != n) {
      throw Error(ErrorKind::InvalidPermutation, "one-line notation needs exactly " +
                                                     std::to_string(n) + " images: \"" +
                                                     std::string(s) + "\"");
    }
    return Permutation(std::move(im));
  }

  Permutation result = Permutation::identity(n);
  if (s.empty() || s == "id") return result;
  std::vector<Permutation> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') {
      throw Error(ErrorKind::ParseError, "expected '(' in \"" + std::string(s) + "\"");
    }
    const std::size_t close = s.find(')', i);
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "unterminated cycle in \"" + std::string(s) + "\"");
    }
    const std::vector<int> cyc = parse_labels(s.substr(i + 1, close - i - 1), n, s);
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k]]) {
        throw Error(ErrorKind::InvalidPermutation, "repeated label in cycle of \"" + std::string(s) + "\"");
      }
      used[cyc[k]] = true;
      im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    cycles.emplace_back(std::move(im));
    i = close + 1;
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) result = *it * result;
  return result;
}

struct PermutationGroup::Data {
  int n = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::vector<std::vector<int>> words;
};

PermutationGroup::PermutationGroup() {
  auto d = std::make_shared<Data>();
  d->elements.push_back(Permutation::identity(0));
  d->words.emplace_back();
  data_ = std::move(d);
}

int PermutationGroup::degree() const { return data_->n; }
std::size_t PermutationGroup::order() const { return data_->elements.size(); }
std::span<const Permutation> PermutationGroup::generators() const { return data_->generators; }
std::span<const Permutation> PermutationGroup::elements() const { return data_->elements; }
const Permutation& PermutationGroup::element(std::size_t i) const { return data_->elements.at(i); }
std::span<const int> PermutationGroup::word(std::size_t i) const { return data_->words.at(i); }

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  const auto& el = data_->elements;
  auto it = std::lower_bound(el.begin(), el.end(), p);
  if (it == el.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - el.begin());
}

bool PermutationGroup::is_trivial() const {
  return std::all_of(data_->generators.begin(), data_->generators.end(),
                     [](const Permutation& g) { return g.is_identity(); });
}

PermutationGroup group_from_generators(std::vector<Permutation> gens, int n, std::size_t cap) {
  if (n < 0) throw Error(ErrorKind::InvalidPermutation, "negative point count");
  if (cap < 1) throw Error(ErrorKind::ClosureExceedsCap, "enumeration cap must be at least 1");
  for (const auto& g : gens) {
    if (g.size() != n) {
      throw Error(ErrorKind::InvalidPermutation, "generator " + g.to_cycle_string() + " acts on " +
                                                     std::to_string(g.size()) + " points, expected " +
                                                     std::to_string(n));
    }
  }
  std::map<Permutation, std::vector<int>> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(n);
  seen.emplace(id, std::vector<int>{});
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    const std::vector<int> wx = seen.at(x);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = x * gens[k];
      if (seen.contains(y)) continue;
      if (seen.size() >= cap) {
        throw Error(ErrorKind::ClosureExceedsCap,
                    "group closure exceeds " + std::to_string(cap) + " elements");
      }
      std::vector<int> wy = wx;
      wy.push_back(static_cast<int>(k));
      seen.emplace(y, std::move(wy));
      queue.push_back(std::move(y));
    }
  }
  auto d = std::make_shared<PermutationGroup::Data>();
  d->n = n;
  d->generators = std::move(gens);
  d->elements.reserve(seen.size());
  d->words.reserve(seen.size());
  for (auto& [p, w] : seen) {  // std::map iterates in sorted order
    d->elements.push_back(p);
    d->words.push_back(w);
  }
  PermutationGroup g;
  g.data_ = std::move(d);
  return g;
}

Matrix permutation_matrix(const Permutation& p) {
  const int n = p.size();
  Matrix m = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m(p(j), j) = 1.0;
  return m;
}

PermutationGroup subgroup_from_elements(const PermutationGroup& g,
                                        const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  PermutationGroup current = group_from_generators({}, g.degree());
  for (const auto& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = group_from_generators(gens, g.degree(), g.order());
  }
  return current;
}

PermutationGroup stabilizer(const PermutationGroup& g, int point) {
  if (point < 0 || point >= g.degree()) {
    throw Error(ErrorKind::DimensionMismatch, "stabilizer point out of range");
  }
  std::vector<Permutation> fixing;
  for (const auto& e : g.elements()) {
    if (e(point) == point) fixing.push_back(e);
  }
  return subgroup_from_elements(g, fixing);
}

std::vector<int> orbit(const PermutationGroup& g, int point) {
  std::vector<bool> hit(static_cast<std::size_t>(g.degree()), false);
  for (const auto& e : g.elements()) hit[e(point)] = true;
  std::vector<int> out;
  for (int i = 0; i < g.degree(); ++i) {
    if (hit[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> orbits(const PermutationGroup& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> covered(static_cast<std::size_t>(g.degree()), false);
  for (int i = 0; i < g.degree(); ++i) {
    if (covered[i]) continue;
    auto o = orbit(g, i);
    for (int j : o) covered[j] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool is_transitive(const PermutationGroup& g) {
  if (g.degree() == 0) return true;
  return static_cast<int>(orbit(g, 0).size()) == g.degree();
}

std::vector<Permutation> transversal(const PermutationGroup& g, int base) {
  const int n = g.degree();
  if (base < 0 || base >= n) throw Error(ErrorKind::DimensionMismatch, "transversal base out of range");
  std::vector<std::optional<Permutation>> pick(static_cast<std::size_t>(n));
  for (const auto& e : g.elements()) {
    auto& slot = pick[e(base)];
    if (!slot) slot = e;
  }
  std::vector<Permutation> out;
  out.reserve(pick.size());
  for (int i = 0; i < n; ++i) {
    if (!pick[i]) {
      throw Error(ErrorKind::NotTransitive,
                  "point " + std::to_string(i + 1) + " is not in the orbit of " + std::to_string(base + 1));
    }
    out.push_back(*pick[i]);
  }
  return out;
}

}  // namespace symarr
