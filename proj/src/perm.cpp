#include "cdt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace cdt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text, int first_point) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  const bool comma_separated = text.find(',') != std::string_view::npos;
  std::vector<int> cycle;
  std::vector<bool> used(static_cast<std::size_t>(degree));
  bool open = false;
  auto point = [&](int name) {
    int p = name - first_point;
    if (p < 0 || p >= degree) throw std::invalid_argument("cycle point out of range");
    if (used[static_cast<std::size_t>(p)]) throw std::invalid_argument("cycle point repeated");
    used[static_cast<std::size_t>(p)] = true;
    return p;
  };
  auto close = [&] {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    cycle.clear();
  };
  std::string number;
  for (char c : text) {
    if (c == '(') {
      if (open) throw std::invalid_argument("nested '(' in cycle notation");
      open = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw std::invalid_argument("cycle point outside parentheses");
      if (comma_separated)
        number += c;
      else
        cycle.push_back(point(c - '0'));
    } else if (c == ',' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
      if (!number.empty()) {
        cycle.push_back(point(std::stoi(number)));
        number.clear();
      }
      if (c == ')') {
        if (!open) throw std::invalid_argument("unmatched ')' in cycle notation");
        open = false;
        close();
      }
    } else {
      throw std::invalid_argument("unexpected character in cycle notation");
    }
  }
  if (open) throw std::invalid_argument("unclosed cycle");
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x] = rhs.images_[static_cast<std::size_t>(images_[x])];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

int Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  long result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    long len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
      seen[y] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<int>(result);
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == static_cast<int>(x)) continue;
    out += '(';
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
      seen[y] = 1;
      if (y != x) out += ',';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.point);
  level.slot.assign(static_cast<std::size_t>(degree_), -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.inverse_transversal.assign(1, Permutation::identity(degree_));
  level.slot[static_cast<std::size_t>(level.point)] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const int beta = level.orbit[i];
    for (const Permutation& s : level.gens) {
      const int image = s[beta];
      if (level.slot[static_cast<std::size_t>(image)] != -1) continue;
      level.slot[static_cast<std::size_t>(image)] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation u = level.transversal[i] * s;
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
  level.resume_orbit = 0;
  level.resume_gen = 0;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const int beta = p[level.point];
    const int s = level.slot[static_cast<std::size_t>(beta)];
    if (s < 0) return {std::move(p), l};
    p = p * level.inverse_transversal[static_cast<std::size_t>(s)];
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  levels_.clear();
  auto fixes_base = [&](const Permutation& g) {
    return std::all_of(levels_.begin(), levels_.end(),
                       [&](const Level& l) { return g[l.point] == l.point; });
  };
  for (const Permutation& g : generators_) {
    if (g.is_identity()) continue;
    if (fixes_base(g)) levels_.emplace_back().point = g.first_moved();
  }
  if (levels_.empty()) return;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Permutation& g : generators_) {
      if (g.is_identity()) continue;
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g[levels_[j].point] != levels_[j].point) fixes_prefix = false;
      if (fixes_prefix) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  auto i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    Level& level = levels_[static_cast<std::size_t>(i)];
    bool extended = false;
    for (; level.resume_orbit < level.orbit.size(); ++level.resume_orbit, level.resume_gen = 0) {
      const std::size_t b = level.resume_orbit;
      for (; level.resume_gen < level.gens.size(); ++level.resume_gen) {
        const Permutation& s = level.gens[level.resume_gen];
        const int image = s[level.orbit[b]];
        const auto slot = static_cast<std::size_t>(level.slot[static_cast<std::size_t>(image)]);
        Permutation schreier = level.transversal[b] * s * level.inverse_transversal[slot];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) levels_.emplace_back().point = residue.first_moved();
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<long>(stop);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& l : levels_) n *= l.orbit.size();
  return n;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const Level& l : levels_) out.push_back(l.point);
  return out;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const Level& l : levels_) out.push_back(l.orbit.size());
  return out;
}

std::vector<std::vector<int>> orbits_of(int degree, std::span<const Permutation> gens) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Permutation& g : gens)
    for (int x = 0; x < degree; ++x) {
      int a = find(x), b = find(g[x]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) groups[static_cast<std::size_t>(find(x))].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& grp : groups)
    if (!grp.empty()) out.push_back(std::move(grp));
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const { return orbits_of(degree_, generators_); }

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

bool PermGroup::is_regular() const {
  return is_transitive() && order() == static_cast<std::uint64_t>(std::max(degree_, 1));
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // Every element factors as t_{m-1} * ... * t_1 * t_0 with t_l from level l.
  for (auto l = levels_.rbegin(); l != levels_.rend(); ++l) {
    std::vector<Permutation> next;
    next.reserve(out.size() * l->transversal.size());
    for (const Permutation& prefix : out)
      for (const Permutation& t : l->transversal) next.push_back(prefix * t);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> PermGroup::order_spectrum() const {
  std::set<int> out;
  for (const Permutation& p : elements()) out.insert(p.order());
  return out;
}

std::vector<Permutation> generate_elements(int degree, std::span<const Permutation> gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& s : gens) {
      Permutation y = x * s;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cdt
