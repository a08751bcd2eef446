#include "distint/model.hpp"

#include "distint/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace distint {

PartitionSpec make_spec(std::vector<PartGroup> parts) {
  if (parts.empty()) throw InvalidSpec("partition needs at least one group");
  BigInt prev = 0;
  BigInt n = 0, r = 0;
  for (const auto& g : parts) {
    if (g.size < 1) throw InvalidSpec("part size must be >= 1");
    if (g.count < 1) throw InvalidSpec("part count must be >= 1");
    if (g.size <= prev)
      throw InvalidSpec("part sizes must be strictly increasing");
    prev = g.size;
    n += g.size * g.count;
    r += g.count;
  }
  return PartitionSpec{std::move(parts), std::move(n), std::move(r)};
}

PartitionSpec make_spec(const std::vector<BigInt>& sizes,
                        const std::vector<BigInt>& counts) {
  if (sizes.size() != counts.size())
    throw InvalidSpec("size and count vectors differ in length");
  std::vector<PartGroup> parts;
  parts.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    parts.push_back({sizes[i], counts[i]});
  return make_spec(std::move(parts));
}

PartitionSpec group(const std::vector<BigInt>& multiset) {
  if (multiset.empty()) throw InvalidSpec("empty part multiset");
  std::map<BigInt, BigInt> mult;
  for (const auto& p : multiset) {
    if (p < 1) throw InvalidSpec("part size must be >= 1");
    mult[p] += 1;
  }
  std::vector<PartGroup> parts;
  parts.reserve(mult.size());
  for (const auto& [size, count] : mult) parts.push_back({size, count});
  return make_spec(std::move(parts));
}

std::vector<BigInt> ungroup(const PartitionSpec& spec) {
  std::vector<BigInt> out;
  for (const auto& g : spec.parts) {
    // Counts are bounded here by the caller's willingness to materialize.
    for (BigInt i = 0; i < g.count; ++i) out.push_back(g.size);
  }
  return out;
}

PartitionSpec scale(const PartitionSpec& spec, const ScaleFactor& q) {
  if (q.q < 1) throw InvalidSpec("scale factor must be >= 1");
  std::vector<PartGroup> parts = spec.parts;
  for (auto& g : parts) g.size *= q.q;
  return make_spec(std::move(parts));
}

PrimitiveReduction primitive_reduce(const PartitionSpec& spec) {
  BigInt g = 0;
  for (const auto& part : spec.parts) g = gcd(g, part.size);
  std::vector<PartGroup> parts = spec.parts;
  for (auto& part : parts) part.size /= g;
  return {make_spec(std::move(parts)), g};
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

BigInt parse_positive(const std::string& tok, const std::string& context) {
  if (tok.empty()) throw ParseError("empty number in '" + context + "'");
  for (char c : tok)
    if (c < '0' || c > '9')
      throw ParseError("bad token '" + context + "': expected digits, got '" +
                       tok + "'");
  BigInt v(tok);
  if (v < 1) throw ParseError("bad token '" + context + "': must be positive");
  return v;
}

}  // namespace

PartitionSpec parse_spec(const std::string& text) {
  if (text.empty()) throw ParseError("empty partition description");
  const auto tokens = split(text, ',');
  const bool grouped = text.find('x') != std::string::npos;

  if (!grouped) {
    std::vector<BigInt> sizes;
    sizes.reserve(tokens.size());
    for (const auto& tok : tokens) sizes.push_back(parse_positive(tok, tok));
    try {
      return group(sizes);
    } catch (const InvalidSpec& e) {
      throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
  }

  std::vector<PartGroup> parts;
  parts.reserve(tokens.size());
  for (const auto& tok : tokens) {
    const auto xpos = tok.find('x');
    if (xpos == std::string::npos || tok.find('x', xpos + 1) != std::string::npos)
      throw ParseError("bad token '" + tok + "': expected COUNTxSIZE");
    parts.push_back({parse_positive(tok.substr(xpos + 1), tok),
                     parse_positive(tok.substr(0, xpos), tok)});
  }
  try {
    return make_spec(std::move(parts));
  } catch (const InvalidSpec& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

std::string format_spec(const PartitionSpec& spec) {
  std::ostringstream os;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    if (i) os << ',';
    os << spec.parts[i].count.str() << 'x' << spec.parts[i].size.str();
  }
  return os.str();
}

}  // namespace distint
