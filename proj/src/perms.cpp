#include "ternalg/perms.hpp"

#include <cctype>
#include <deque>

#include "ternalg/error.hpp"

namespace ternalg {

Perm5::Perm5() : m_images{1, 2, 3, 4, 5} {}

Perm5::Perm5(const std::array<int, 5> &images) : m_images(images)
{
  std::array<bool, 5> seen{};
  for (int v : images) {
    if (v < 1 || v > 5 || seen[v - 1])
      throw Error("Perm5: images are not a bijection of {1..5}");
    seen[v - 1] = true;
  }
}

Perm5 Perm5::parse(std::string_view text)
{
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip();
    if (pos != text.size())
      throw ParseError("trailing characters after 'id'", pos);
    return Perm5();
  }
  Perm5 result;
  bool any = false;
  while (true) {
    skip();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    std::array<bool, 5> used{};
    while (true) {
      skip();
      if (pos == text.size())
        throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      char c = text[pos];
      if (c < '1' || c > '5')
        throw ParseError("cycle entries must be digits 1..5", pos);
      int point = c - '0';
      if (used[point - 1])
        throw ParseError("repeated point in cycle", pos);
      used[point - 1] = true;
      cycle.push_back(point);
      ++pos;
    }
    if (cycle.empty())
      throw ParseError("empty cycle", pos - 1);
    std::array<int, 5> images{1, 2, 3, 4, 5};
    for (std::size_t t = 0; t < cycle.size(); ++t)
      images[cycle[t] - 1] = cycle[(t + 1) % cycle.size()];
    result = compose(result, Perm5(images));
    any = true;
  }
  if (!any)
    throw ParseError("empty permutation", pos);
  return result;
}

bool Perm5::is_identity() const
{
  return *this == Perm5();
}

int Perm5::order() const
{
  Perm5 acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, *this);
    ++k;
  }
  return k;
}

std::string Perm5::format() const
{
  if (is_identity())
    return "id";
  std::string out;
  std::array<bool, 5> seen{};
  for (int start = 1; start <= 5; ++start) {
    if (seen[start - 1] || m_images[start - 1] == start)
      continue;
    out += '(';
    int point = start;
    bool first = true;
    while (!seen[point - 1]) {
      seen[point - 1] = true;
      if (!first)
        out += ' ';
      out += std::to_string(point);
      first = false;
      point = m_images[point - 1];
    }
    out += ')';
  }
  return out;
}

Perm5 compose(const Perm5 &p, const Perm5 &q)
{
  std::array<int, 5> images;
  for (int i = 1; i <= 5; ++i)
    images[i - 1] = q(p(i));
  return Perm5(images);
}

Perm5 inverse(const Perm5 &p)
{
  std::array<int, 5> images;
  for (int i = 1; i <= 5; ++i)
    images[p(i) - 1] = i;
  return Perm5(images);
}

Perm5 power(const Perm5 &p, int k)
{
  Perm5 base = k < 0 ? inverse(p) : p;
  Perm5 acc;
  for (int t = 0; t < (k < 0 ? -k : k); ++t)
    acc = compose(acc, base);
  return acc;
}

Perm5 ga_sigma()
{
  return Perm5({2, 3, 4, 5, 1});
}

Perm5 ga_tau()
{
  return Perm5::parse("(2 4 5 3)");
}

std::set<Perm5> generate_subgroup(const std::vector<Perm5> &gens)
{
  if (gens.empty())
    throw Error("generate_subgroup: no generators");
  std::set<Perm5> group{Perm5()};
  std::deque<Perm5> frontier{Perm5()};
  while (!frontier.empty()) {
    Perm5 g = frontier.front();
    frontier.pop_front();
    for (const auto &s : gens) {
      Perm5 h = compose(g, s);
      if (group.insert(h).second)
        frontier.push_back(h);
    }
  }
  return group;
}

std::optional<std::pair<int, int>> affine_form(const Perm5 &p)
{
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      bool match = true;
      for (int x = 0; x < 5 && match; ++x)
        match = p(x + 1) == (a * x + b) % 5 + 1;
      if (match)
        return std::make_pair(a, b);
    }
  return std::nullopt;
}

PresentationReport check_presentation()
{
  PresentationReport report;
  const Perm5 sigma = ga_sigma();
  const Perm5 tau = ga_tau();
  auto group = generate_subgroup({sigma, tau});
  report.group_order = group.size();
  report.sigma_order_5 = power(sigma, 5).is_identity() && sigma.order() == 5;
  report.tau_order_4 = power(tau, 4).is_identity() && tau.order() == 4;
  report.conjugation = compose(compose(tau, sigma), inverse(tau)) == power(sigma, 2);
  std::set<std::pair<int, int>> forms;
  report.all_affine = true;
  for (const auto &g : group) {
    auto form = affine_form(g);
    if (!form)
      report.all_affine = false;
    else
      forms.insert(*form);
  }
  report.affine_matches = forms.size();
  return report;
}

} // namespace ternalg
