#pragma once
// Serialization for the command-line tool.  Every data payload uses one
// shape: {"n", "k", "side", "object", "items": [...]} where an item
// carries a key string, a monomial exponent vector, a coefficient, and
// a degree.  Coefficients are plain integers when they fit, decimal
// strings when they do not, and {"num", "den"} pairs of canonical
// Laurent strings for rational values.

#include "forkalg/laurent.hpp"
#include "forkalg/osz.hpp"
#include "forkalg/sartori.hpp"
#include "forkalg/states.hpp"
#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace forkalg::jio {

using Json = nlohmann::ordered_json;

Json int_json(const Int& v);
Json laurent_json(const Laurent& l);
Json qrat_json(const QRat& r);

// The q-exponent of a monomial value, 0 for anything else; fills the
// degree field of table entries.
int mono_qdeg(const QRat& r);

struct Item {
  std::string key;
  std::vector<int> monomial;
  Json coeff = 1;
  int degree = 0;
  bool operator==(const Item&) const = default;
};

Json payload(int n, int k, const std::string& side, const std::string& object,
             const std::vector<Item>& items);
std::vector<Item> parse_items(const Json& p);

// "{0,3}|{1,2}" and "uddu|duud"; parsers throw std::invalid_argument.
std::string pair_key(const IState& x, const IState& y);
std::string pair_key(const UpDownSeq& mu, const UpDownSeq& lambda);
std::pair<IState, IState> parse_state_key(int n, const std::string& key);
std::pair<UpDownSeq, UpDownSeq> parse_seq_key(const std::string& key);

// One item per term, keys in element order.
Json element_json(const OszElt& a, const std::string& object = "element");
Json element_json(const SarElt& h, const std::string& object = "element");

// Laurent polynomial with braced exponents, for table output.
std::string latex_laurent(const Laurent& l);
std::string latex_qrat(const QRat& r);

}  // namespace forkalg::jio
