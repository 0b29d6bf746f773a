#include "drg/intersection_array.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace drg {

IntersectionArray::IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
    : b_(std::move(b)), c_(std::move(c)) {
  if (b_.empty() || c_.empty()) throw std::invalid_argument("intersection array halves must be nonempty");
  if (b_.size() != c_.size()) throw std::invalid_argument("length mismatch");
  for (auto x : b_)
    if (x <= 0) throw std::invalid_argument("non-positive entry " + std::to_string(x));
  for (auto x : c_)
    if (x <= 0) throw std::invalid_argument("non-positive entry " + std::to_string(x));
}

std::int64_t IntersectionArray::b(int i) const {
  if (i < 0 || i > diameter()) throw std::out_of_range("b index out of range");
  return i == diameter() ? 0 : b_[static_cast<std::size_t>(i)];
}

std::int64_t IntersectionArray::c(int i) const {
  if (i < 0 || i > diameter()) throw std::out_of_range("c index out of range");
  return i == 0 ? 0 : c_[static_cast<std::size_t>(i - 1)];
}

DerivedParams derive(const IntersectionArray& ia) {
  DerivedParams d;
  const int D = ia.diameter();
  d.a.reserve(static_cast<std::size_t>(D + 1));
  for (int i = 0; i <= D; ++i) d.a.push_back(ia.a(i));
  d.k_seq.emplace_back(1);
  d.v = 1;
  for (int i = 1; i <= D; ++i) {
    Rational next = d.k_seq.back() * Rational(ia.b(i - 1)) / Rational(ia.c(i));
    d.v += next;
    d.k_seq.push_back(std::move(next));
  }
  d.t = Rational(ia.k()) / Rational(ia.a(1) + 1);
  return d;
}

Validity formal_validity(const IntersectionArray& ia) {
  const int D = ia.diameter();
  auto fail = [](std::string why) { return Validity{false, std::move(why)}; };
  if (ia.c(1) != 1) return fail("c1 = " + std::to_string(ia.c(1)) + " != 1");
  for (int i = 1; i < D; ++i)
    if (ia.b(i) > ia.b(i - 1) || (i == 1 && ia.b(1) == ia.b(0))) return fail("b not nonincreasing");
  for (int i = 2; i <= D; ++i)
    if (ia.c(i) < ia.c(i - 1)) return fail("c not nondecreasing");
  for (int i = 1; i <= D; ++i)
    for (int j = 1; i + j <= D; ++j)
      if (ia.b(i) < ia.c(j)) {
        std::ostringstream os;
        os << "b" << i << " = " << ia.b(i) << " < c" << j << " = " << ia.c(j) << " with " << i << "+" << j
           << " <= " << D;
        return fail(os.str());
      }
  for (int i = 0; i <= D; ++i)
    if (ia.a(i) < 0) return fail("a" + std::to_string(i) + " = " + std::to_string(ia.a(i)) + " < 0");
  return {};
}

ArrayFlags array_tests(const IntersectionArray& ia) {
  ArrayFlags f;
  const int D = ia.diameter();
  f.bipartite_formal = true;
  for (int i = 0; i <= D; ++i)
    if (ia.a(i) != 0) f.bipartite_formal = false;
  f.antipodal_formal = true;
  for (int i = 0; i <= D; ++i) {
    if (i == D / 2) continue;
    if (ia.b(i) != ia.c(D - i)) f.antipodal_formal = false;
  }
  return f;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::int64_t> parse_half(std::string_view half) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = half.find(',', pos);
    const std::string_view token = strip(half.substr(pos, comma == std::string_view::npos ? half.npos : comma - pos));
    if (token.empty()) throw ParseError("empty entry in \"" + std::string(half) + "\"");
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size())
      throw ParseError("invalid token \"" + std::string(token) + "\"");
    if (value <= 0) throw ParseError("non-positive entry \"" + std::string(token) + "\"");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

IntersectionArray parse_array(std::string_view text) {
  const std::string_view body = strip(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw ParseError("expected \"{b0,...;c1,...}\", got \"" + std::string(body) + "\"");
  const std::string_view inner = body.substr(1, body.size() - 2);
  const std::size_t semi = inner.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' in \"" + std::string(body) + "\"");
  if (inner.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("more than one ';' in \"" + std::string(body) + "\"");
  auto b = parse_half(inner.substr(0, semi));
  auto c = parse_half(inner.substr(semi + 1));
  if (b.size() != c.size()) throw ParseError("length mismatch");
  return IntersectionArray(std::move(b), std::move(c));
}

std::string format_array(const IntersectionArray& ia) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < ia.b_values().size(); ++i) os << (i ? "," : "") << ia.b_values()[i];
  os << ";";
  for (std::size_t i = 0; i < ia.c_values().size(); ++i) os << (i ? "," : "") << ia.c_values()[i];
  os << "}";
  return os.str();
}

bool search_order_less(const IntersectionArray& x, const IntersectionArray& y) {
  auto key = [](const IntersectionArray& ia) {
    std::vector<std::int64_t> out{ia.diameter(), ia.k()};
    if (ia.diameter() >= 2) {
      out.push_back(ia.b(1));
      out.push_back(ia.c(2));
    }
    for (int i = 2; i < ia.diameter(); ++i) out.push_back(ia.b(i));
    for (int i = 3; i <= ia.diameter(); ++i) out.push_back(ia.c(i));
    return out;
  };
  return key(x) < key(y);
}

}  // namespace drg
