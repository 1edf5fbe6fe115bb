#include "meul/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace meul {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

}  // namespace

std::string format_composition(const Composition& c) {
  std::string out;
  for (int i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Composition parse_composition(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty composition");
  std::vector<int> parts;
  if (text.find(',') != std::string::npos) {
    for (const auto& piece : split(text, ',')) parts.push_back(parse_int(piece));
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("compact composition must be digits only");
      parts.push_back(ch - '0');
    }
  }
  return Composition(std::move(parts));
}

std::string format_division(const Division& d) {
  std::string out;
  for (int i = 0; i < d.block_count(); ++i) {
    if (i) out += '|';
    const auto& b = d.block(i);
    if (b.empty()) {
      out += '-';
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(b[j]);
    }
  }
  return out;
}

Division parse_division(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty division");
  std::vector<std::vector<Element>> blocks;
  for (const auto& piece : split(text, '|')) {
    if (piece == "-" || piece.empty()) {
      blocks.emplace_back();
      continue;
    }
    std::vector<Element> block;
    for (const auto& item : split(piece, ',')) block.push_back(parse_int(item));
    blocks.push_back(std::move(block));
  }
  return Division(std::move(blocks));
}

std::string format_permutation(const Permutation& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](Element e) { return e >= 1 && e <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string format_poly(const MVPoly& p) {
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [expo, coef] = *it;
    for (std::size_t i = 0; i < expo.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(expo[i]);
    }
    out += " : ";
    out += format_rational(coef);
    out += '\n';
  }
  return out;
}

}  // namespace meul
