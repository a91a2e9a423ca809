#include "json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace forkalg::jio {

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return (long)v.get_si();
  return v.get_str();
}

Json laurent_json(const Laurent& l) {
  if (l.is_zero()) return 0;
  if (l.terms().size() == 1 && l.lo() == 0) return int_json(l.coeff(0));
  return Json{{"num", l.str()}, {"den", "1"}};
}

Json qrat_json(const QRat& r) {
  if (r.is_laurent()) return laurent_json(r.num());
  return Json{{"num", r.num().str()}, {"den", r.den().str()}};
}

int mono_qdeg(const QRat& r) {
  if (r.is_laurent() && r.num().terms().size() == 1) return r.num().hi();
  return 0;
}

Json payload(int n, int k, const std::string& side, const std::string& object,
             const std::vector<Item>& items) {
  Json out{{"n", n}, {"k", k}, {"side", side}, {"object", object}};
  Json arr = Json::array();
  for (const auto& it : items)
    arr.push_back(Json{{"key", it.key},
                       {"monomial", it.monomial},
                       {"coeff", it.coeff},
                       {"degree", it.degree}});
  out["items"] = std::move(arr);
  return out;
}

std::vector<Item> parse_items(const Json& p) {
  std::vector<Item> out;
  for (const auto& j : p.at("items")) {
    Item it;
    it.key = j.at("key").get<std::string>();
    it.monomial = j.at("monomial").get<std::vector<int>>();
    it.coeff = j.at("coeff");
    it.degree = j.at("degree").get<int>();
    out.push_back(std::move(it));
  }
  return out;
}

std::string pair_key(const IState& x, const IState& y) {
  return x.str() + "|" + y.str();
}

std::string pair_key(const UpDownSeq& mu, const UpDownSeq& lambda) {
  return mu.str() + "|" + lambda.str();
}

namespace {

IState parse_state(int n, const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::invalid_argument("state key must look like {0,3}: " + s);
  std::vector<int> regions;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty region in " + s);
    regions.push_back(std::stoi(tok));
  }
  return IState(n, std::move(regions));
}

std::pair<std::string, std::string> split_key(const std::string& key) {
  auto bar = key.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("pair key needs a '|': " + key);
  return {key.substr(0, bar), key.substr(bar + 1)};
}

}  // namespace

std::pair<IState, IState> parse_state_key(int n, const std::string& key) {
  auto [a, b] = split_key(key);
  return {parse_state(n, a), parse_state(n, b)};
}

std::pair<UpDownSeq, UpDownSeq> parse_seq_key(const std::string& key) {
  auto [a, b] = split_key(key);
  return {UpDownSeq::parse(a), UpDownSeq::parse(b)};
}

Json element_json(const OszElt& a, const std::string& object) {
  std::vector<Item> items;
  for (const auto& [key, p] : a.terms) {
    int d = distance(key.first, key.second);
    for (const auto& [m, c] : p.terms())
      items.push_back(
          {pair_key(key.first, key.second), m.e, int_json(c), m.qdeg() + d});
  }
  return payload(a.n, a.k, "osz", object, items);
}

Json element_json(const SarElt& h, const std::string& object) {
  std::vector<Item> items;
  for (const auto& [key, p] : h.terms) {
    int shift = hom_shift(key.first, key.second);
    for (const auto& [m, c] : p.terms())
      items.push_back({pair_key(key.first, key.second), m.e, int_json(c),
                       m.qdeg() + shift});
  }
  return payload(h.n, h.k, "sartori", object, items);
}

std::string latex_laurent(const Laurent& l) {
  if (l.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : l.terms()) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      os << "q";
      if (e != 1) os << "^{" << e << "}";
    }
  }
  return os.str();
}

std::string latex_qrat(const QRat& r) {
  if (r.is_laurent()) return latex_laurent(r.num());
  return "\\frac{" + latex_laurent(r.num()) + "}{" + latex_laurent(r.den()) +
         "}";
}

}  // namespace forkalg::jio
