#include "ternalg/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ternalg/error.hpp"
#include "ternalg/zoo.hpp"

namespace ternalg {

using nlohmann::json;

namespace {

std::string trim(std::string_view s)
{
  auto first = s.find_first_not_of(" \t\n\r");
  if (first == std::string_view::npos)
    return {};
  auto last = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(first, last - first + 1));
}

json descriptor_value(const std::string &text)
{
  if (text == "true")
    return true;
  if (text == "false")
    return false;
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::stoull(text);
  return text;
}

} // namespace

json parse_descriptor(std::string_view text)
{
  const auto colon = text.find(':');
  json spec = json::object();
  spec["kind"] = trim(text.substr(0, colon));
  if (spec["kind"].get<std::string>().empty())
    throw ParseError("descriptor has no kind", 0);
  if (colon == std::string_view::npos)
    return spec;
  std::size_t pos = colon + 1;
  if (trim(text.substr(pos)).empty())
    return spec;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string item = trim(text.substr(pos, comma - pos));
    if (item.empty())
      throw ParseError("empty item in descriptor", pos);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("expected key=value in descriptor", pos);
    std::string key = trim(item.substr(0, eq));
    if (spec.contains(key))
      throw ParseError("duplicate descriptor key '" + key + "'", pos);
    spec[key] = descriptor_value(trim(item.substr(eq + 1)));
    pos = comma + 1;
  }
  return spec;
}

namespace {

class SpecReader
{
public:
  explicit SpecReader(const json &spec) : m_spec(spec)
  {
    if (!spec.is_object())
      throw ParseError("algebra descriptor must be a JSON object", 0);
  }

  std::size_t count(const std::string &key, std::optional<std::size_t> fallback = std::nullopt)
  {
    m_used.insert(key);
    if (!m_spec.contains(key)) {
      if (!fallback)
        throw ParseError("descriptor is missing '" + key + "'", 0);
      return *fallback;
    }
    const json &v = m_spec.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw ParseError("'" + key + "' must be a non-negative integer", 0);
    return v.get<std::size_t>();
  }

  std::string word(const std::string &key, const std::string &fallback, std::initializer_list<const char *> allowed)
  {
    m_used.insert(key);
    if (!m_spec.contains(key))
      return fallback;
    const json &v = m_spec.at(key);
    if (!v.is_string())
      throw ParseError("'" + key + "' must be a string", 0);
    std::string s = v.get<std::string>();
    for (const char *a : allowed)
      if (s == a)
        return s;
    std::string msg = "'" + key + "' must be one of";
    for (const char *a : allowed)
      msg += std::string(" ") + a;
    throw ParseError(msg, 0);
  }

  bool flag(const std::string &key, bool fallback)
  {
    m_used.insert(key);
    if (!m_spec.contains(key))
      return fallback;
    const json &v = m_spec.at(key);
    if (!v.is_boolean())
      throw ParseError("'" + key + "' must be true or false", 0);
    return v.get<bool>();
  }

  bool has(const std::string &key) const { return m_spec.contains(key); }
  const json &raw(const std::string &key)
  {
    m_used.insert(key);
    return m_spec.at(key);
  }

  void finish() const
  {
    for (const auto &[key, value] : m_spec.items())
      if (key != "kind" && !m_used.count(key))
        throw ParseError("unknown descriptor key '" + key + "'", 0);
  }

private:
  const json &m_spec;
  std::set<std::string> m_used;
};

std::size_t positive(std::size_t v, const char *what)
{
  if (v == 0)
    throw ParseError(std::string(what) + " must be positive", 0);
  return v;
}

TernaryAlgebra custom_from_json(SpecReader &rd)
{
  if (rd.has("random-seed")) {
    std::size_t dim = positive(rd.count("dim", 3), "dim");
    std::uint64_t seed = rd.count("random-seed");
    rd.finish();
    return random_algebra(dim, seed);
  }
  const std::size_t dim = positive(rd.count("dim"), "dim");
  const std::string mode = rd.word("mode", "trilinear", {"trilinear", "conjugate-mid", "conj-mid"});
  std::vector<std::string> labels;
  if (rd.has("labels")) {
    const json &l = rd.raw("labels");
    if (!l.is_array() || l.size() != dim)
      throw ParseError("'labels' must be an array of dim strings", 0);
    for (const auto &x : l)
      labels.push_back(x.get<std::string>());
  }
  Tensor4<CycNum> p(dim);
  if (rd.has("product")) {
    const json &list = rd.raw("product");
    if (!list.is_array())
      throw ParseError("'product' must be an array", 0);
    std::size_t entry = 0;
    for (const auto &e : list) {
      auto index = [&](const char *key) {
        if (!e.contains(key) || !e.at(key).is_number_integer())
          throw ParseError(std::string("product entry needs integer '") + key + "'", entry);
        long long v = e.at(key).get<long long>();
        if (v < 1 || static_cast<std::size_t>(v) > dim)
          throw ParseError(std::string("product index '") + key + "' out of range 1.." + std::to_string(dim), entry);
        return static_cast<std::size_t>(v - 1);
      };
      if (!e.is_object() || !e.contains("value"))
        throw ParseError("product entry needs a 'value'", entry);
      const json &v = e.at("value");
      CycNum value = v.is_string() ? parse_cyc(v.get<std::string>()) : CycNum(v.get<long>());
      p.at(index("m"), index("i"), index("j"), index("k")) += value;
      ++entry;
    }
  }
  rd.finish();
  return TernaryAlgebra(std::move(p), mode == "trilinear" ? Linearity::Trilinear : Linearity::ConjugateMid,
                        std::move(labels));
}

} // namespace

TernaryAlgebra algebra_from_json(const json &spec)
{
  SpecReader rd(spec);
  if (!spec.contains("kind") || !spec.at("kind").is_string())
    throw ParseError("descriptor needs a string 'kind'", 0);
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "cubic") {
    const std::size_t n = positive(rd.count("n", 2), "n");
    const bool conj_mid = rd.flag("conj_mid", false);
    const std::string variant = rd.word("variant", "pairing", {"pairing", "scalar-trace"});
    const std::string pairing = rd.word("pairing", "A", {"A", "B"});
    const std::string basis = rd.word("basis", "standard", {"standard", "G"});
    rd.finish();
    if (basis == "G") {
      if (n != 2 || variant != "pairing")
        throw ParseError("the G basis exists for n=2 with a pairing product only", 0);
      return cubic2_in_G_basis(pairing == "A" ? Pairing::A : Pairing::B, conj_mid);
    }
    if (variant == "scalar-trace")
      return cubic_scalar_trace_algebra(n, conj_mid);
    return cubic_algebra(n, pairing == "A" ? Pairing::A : Pairing::B, conj_mid);
  }
  if (kind == "vector") {
    const std::size_t n = positive(rd.count("n"), "n");
    const std::string form = rd.word("form", "alpha", {"alpha", "hermitian"});
    rd.finish();
    return vector_algebra(n, form == "alpha" ? VectorForm::Alpha : VectorForm::Hermitian);
  }
  if (kind == "rect") {
    const std::size_t m = positive(rd.count("m"), "m");
    const std::size_t n = positive(rd.count("n"), "n");
    const std::string form = rd.word("form", "transpose", {"transpose", "dagger"});
    rd.finish();
    return rect_algebra(m, n, form == "transpose" ? RectForm::Transpose : RectForm::Dagger);
  }
  if (kind == "zero") {
    const std::size_t dim = positive(rd.count("dim"), "dim");
    rd.finish();
    return zero_algebra(dim);
  }
  if (kind == "custom")
    return custom_from_json(rd);
  throw ParseError("unknown algebra kind '" + kind + "'", 0);
}

json constants_to_json(const StructureTensor &c, const std::vector<std::string> &labels, Linearity mode)
{
  const std::size_t d = c.dim();
  json out;
  out["kind"] = "custom";
  out["dim"] = d;
  out["mode"] = mode == Linearity::Trilinear ? "trilinear" : "conjugate-mid";
  if (labels.size() == d)
    out["labels"] = labels;
  json product = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m)
          if (!c.at(m, i, j, k).is_zero())
            product.push_back(
                {{"m", m + 1}, {"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", c.at(m, i, j, k).format()}});
  out["product"] = std::move(product);
  return out;
}

Element parse_element(std::string_view text, const TernaryAlgebra &algebra)
{
  const auto &labels = algebra.labels();
  Element out(algebra.dim());

  // Split into signed terms at top-level '+' / '-' (not inside parentheses
  // and not the sign of an exponent).
  std::vector<std::pair<std::size_t, std::size_t>> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t p = 0; p < text.size(); ++p) {
    char ch = text[p];
    if (ch == '(')
      ++depth;
    else if (ch == ')') {
      if (--depth < 0)
        throw ParseError("unbalanced ')'", p);
    } else if ((ch == '+' || ch == '-') && depth == 0 && p > 0) {
      std::size_t q = p;
      while (q > 0 && std::isspace(static_cast<unsigned char>(text[q - 1])))
        --q;
      if (q > 0 && (text[q - 1] == '^' || text[q - 1] == '*'))
        continue;
      if (!trim(text.substr(start, p - start)).empty())
        terms.emplace_back(start, p);
      start = p;
    }
  }
  if (depth != 0)
    throw ParseError("unbalanced '('", text.size());
  terms.emplace_back(start, text.size());

  bool any = false;
  for (auto [b, e] : terms) {
    std::string term = trim(text.substr(b, e - b));
    if (term.empty())
      throw ParseError("empty term", b);
    CycNum sign(1);
    if (term[0] == '+' || term[0] == '-') {
      if (term[0] == '-')
        sign = CycNum(-1);
      term = trim(term.substr(1));
    }
    std::optional<std::size_t> which;
    CycNum coef = sign;
    std::size_t fstart = 0;
    depth = 0;
    for (std::size_t p = 0; p <= term.size(); ++p) {
      if (p < term.size() && term[p] == '(')
        ++depth;
      if (p < term.size() && term[p] == ')')
        --depth;
      if (p < term.size() && !(term[p] == '*' && depth == 0))
        continue;
      std::string factor = trim(std::string_view(term).substr(fstart, p - fstart));
      fstart = p + 1;
      auto hit = std::find(labels.begin(), labels.end(), factor);
      if (hit != labels.end()) {
        if (which)
          throw ParseError("a term may contain only one basis label", b);
        which = static_cast<std::size_t>(hit - labels.begin());
        continue;
      }
      if (factor.size() >= 2 && factor.front() == '(' && factor.back() == ')')
        factor = factor.substr(1, factor.size() - 2);
      try {
        coef *= parse_cyc(factor);
      } catch (const ParseError &err) {
        throw ParseError("'" + factor + "' is neither a basis label nor a scalar", b);
      }
    }
    if (!which)
      throw ParseError("term '" + term + "' names no basis label", b);
    out[*which] += coef;
    any = true;
  }
  if (!any)
    throw ParseError("empty element expression", 0);
  return out;
}

std::vector<Element> parse_elements(const json &list, const TernaryAlgebra &algebra)
{
  if (!list.is_array())
    throw ParseError("expected a JSON array of elements", 0);
  std::vector<Element> out;
  for (const auto &item : list) {
    if (item.is_string()) {
      out.push_back(parse_element(item.get<std::string>(), algebra));
      continue;
    }
    if (!item.is_array() || item.size() != algebra.dim())
      throw ParseError("coordinate vector must have " + std::to_string(algebra.dim()) + " entries", out.size());
    Element v;
    for (const auto &x : item)
      v.push_back(x.is_string() ? parse_cyc(x.get<std::string>()) : CycNum(x.get<long>()));
    out.push_back(std::move(v));
  }
  return out;
}

std::string format_element(const Element &v, const std::vector<std::string> &labels)
{
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t].is_zero())
      continue;
    const std::string label = t < labels.size() ? labels[t] : "e" + std::to_string(t + 1);
    std::string coef = v[t].format();
    std::string piece;
    if (coef == "1")
      piece = label;
    else if (coef == "-1")
      piece = "-" + label;
    else if (v[t].support() == 1 && coef.find_first_of("+", 1) == std::string::npos &&
             coef.find('-', 1) == std::string::npos)
      piece = coef + "*" + label;
    else
      piece = "(" + coef + ")*" + label;
    if (!out.empty())
      out += piece[0] == '-' ? " - " + piece.substr(1) : " + " + piece;
    else
      out = piece;
  }
  return out.empty() ? "0" : out;
}

} // namespace ternalg
