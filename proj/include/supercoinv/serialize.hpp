#pragma once

#include <string>

#include "json.hpp"

#include "supercoinv/coinvariant.hpp"
#include "supercoinv/qcombinat.hpp"
#include "supercoinv/snchar.hpp"
#include "supercoinv/superschur.hpp"

namespace supercoinv {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
/// "[2,1]" style key used for JSON objects.
Partition partition_from_key(const std::string& key);

Json to_json(const SchurMultVector& v);
SchurMultVector schur_mult_from_json(const Json& j);

/// [{"e": [...], "c": "<integer>"}]; the exponent length must match the
/// alphabet given when parsing.
Json to_json(const QUPoly& p);
QUPoly qupoly_from_json(const Json& j, Alphabet a);

Json to_json(const SuperSchurExpansion& e);
SuperSchurExpansion expansion_from_json(const Json& j);

Json to_json(const Multidegree& d);
Multidegree multidegree_from_json(const Json& j);

Json to_json(const FrobeniusSeries& f);
FrobeniusSeries frobenius_from_json(const Json& j);

Json to_json(const CoeffTable& t);
CoeffTable coeff_table_from_json(const Json& j);

/// Human form with superscripts, lowest total degree first: 1+2q+2q²+q³.
std::string pretty(const QUPoly& p);
std::string pretty(const SchurMultVector& v);

std::string frobenius_csv(const FrobeniusSeries& f);
std::string frobenius_text(const FrobeniusSeries& f);
std::string coeff_table_csv(const CoeffTable& t);
std::string coeff_table_text(const CoeffTable& t);
std::string qupoly_csv(const QUPoly& p);

}  // namespace supercoinv
