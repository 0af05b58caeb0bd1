#include "boole/instance.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

#include "boole/errors.hpp"

namespace boole {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

SubsetMask mask_from_elements(const std::vector<int>& elements, int n) {
    SubsetMask mask = 0;
    for (int e : elements) {
        if (e < 1 || e > n) {
            throw DomainError("set element " + std::to_string(e) + " outside [1, " +
                              std::to_string(n) + "]");
        }
        const SubsetMask bit = SubsetMask{1} << (e - 1);
        if (mask & bit) throw DomainError("repeated set element " + std::to_string(e));
        mask |= bit;
    }
    return mask;
}

std::vector<int> elements_from_mask(SubsetMask mask) {
    std::vector<int> out;
    for (int e = 1; mask != 0; ++e, mask >>= 1) {
        if (mask & 1u) out.push_back(e);
    }
    return out;
}

std::string set_label(SubsetMask mask) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_from_mask(mask)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

int mask_size(SubsetMask mask) {
    return std::popcount(mask);
}

bool SetFamily::contains(SubsetMask mask) const {
    return index_of(mask) >= 0;
}

int SetFamily::index_of(SubsetMask mask) const {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] == mask) return static_cast<int>(i);
    }
    return -1;
}

bool SetFamily::has_all_singletons() const {
    for (int e = 0; e < n; ++e) {
        if (!contains(SubsetMask{1} << e)) return false;
    }
    return true;
}

bool SetFamily::is_complete() const {
    return members.size() == (std::size_t{1} << n) - 1;
}

const Rat& BooleInstance::b_of(SubsetMask mask) const {
    const int i = family.index_of(mask);
    if (i < 0) throw DomainError("set " + set_label(mask) + " not in family");
    return b[static_cast<std::size_t>(i)];
}

Rat AtomDistribution::weight(SubsetMask mask) const {
    const auto it = weights.find(mask);
    return it == weights.end() ? Rat(0) : it->second;
}

void validate_family(const SetFamily& family, bool require_nonempty) {
    if (family.n < 1 || family.n > kGroundSetCap) {
        throw DomainError("ground-set size " + std::to_string(family.n) +
                          " outside [1, " + std::to_string(kGroundSetCap) + "]");
    }
    if (require_nonempty && family.members.empty()) {
        throw DomainError("empty set family");
    }
    const SubsetMask full = (SubsetMask{1} << family.n) - 1;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const SubsetMask m = family.members[i];
        if (m == 0) throw DomainError("empty set in family");
        if (m & ~full) throw DomainError("family member outside ground set");
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            if (family.members[j] == m) {
                throw DomainError("duplicate set " + set_label(m) + " in family");
            }
        }
    }
}

void validate_instance(const BooleInstance& inst) {
    validate_family(inst.family);
    if (inst.b.size() != inst.family.members.size()) {
        throw DomainError("b has " + std::to_string(inst.b.size()) + " entries for " +
                          std::to_string(inst.family.members.size()) + " sets");
    }
    for (std::size_t i = 0; i < inst.b.size(); ++i) {
        if (inst.b[i] < 0 || inst.b[i] > 1) {
            throw DomainError("probability " + rat_str(inst.b[i]) + " for set " +
                              set_label(inst.family.members[i]) + " outside [0, 1]");
        }
    }
}

bool is_distribution(const AtomDistribution& x) {
    Rat total = 0;
    for (const auto& [mask, w] : x.weights) {
        if (w < 0) return false;
        if ((mask >> x.n) != 0) return false;
        total += w;
    }
    return total == 1;
}

namespace {

json parse_json(const std::string& document) {
    json doc = json::parse(document, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    return doc;
}

int read_n(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ParseError("document needs an integer field \"n\"");
    }
    return doc["n"].get<int>();
}

std::vector<int> read_int_array(const json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of set elements");
    std::vector<int> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParseError("set elements must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

json set_to_json(SubsetMask mask) {
    return json(elements_from_mask(mask));
}

}  // namespace

BooleInstance parse_instance(const std::string& document) {
    const json doc = parse_json(document);
    BooleInstance inst;
    inst.family.n = read_n(doc);
    if (inst.family.n < 1 || inst.family.n > kGroundSetCap) {
        throw DomainError("ground-set size outside [1, " + std::to_string(kGroundSetCap) + "]");
    }
    if (!doc.contains("constraints") || !doc["constraints"].is_array()) {
        throw ParseError("document needs an array field \"constraints\"");
    }
    for (const auto& c : doc["constraints"]) {
        if (!c.is_object() || !c.contains("set") || !c.contains("p") || !c["p"].is_string()) {
            throw ParseError("constraint needs \"set\" and string \"p\"");
        }
        inst.family.members.push_back(
            mask_from_elements(read_int_array(c["set"]), inst.family.n));
        inst.b.push_back(rat_parse(c["p"].get<std::string>()));
    }
    validate_instance(inst);
    return inst;
}

std::string serialize_instance(const BooleInstance& inst) {
    ordered_json doc;
    doc["n"] = inst.family.n;
    doc["constraints"] = json::array();
    for (std::size_t i = 0; i < inst.family.members.size(); ++i) {
        ordered_json c;
        c["set"] = set_to_json(inst.family.members[i]);
        c["p"] = rat_str(inst.b[i]);
        doc["constraints"].push_back(std::move(c));
    }
    return doc.dump();
}

SetFamily parse_family(const std::string& document) {
    const json doc = parse_json(document);
    if (doc.is_object() && doc.contains("constraints")) {
        return parse_instance(document).family;
    }
    SetFamily family;
    family.n = read_n(doc);
    if (!doc.contains("sets") || !doc["sets"].is_array()) {
        throw ParseError("document needs an array field \"sets\"");
    }
    for (const auto& s : doc["sets"]) {
        family.members.push_back(mask_from_elements(read_int_array(s), family.n));
    }
    validate_family(family);
    return family;
}

AtomDistribution parse_atoms(const std::string& document) {
    const json doc = parse_json(document);
    AtomDistribution x;
    x.n = read_n(doc);
    if (x.n < 1 || x.n > kGroundSetCap) {
        throw DomainError("ground-set size outside [1, " + std::to_string(kGroundSetCap) + "]");
    }
    if (!doc.contains("atoms") || !doc["atoms"].is_array()) {
        throw ParseError("document needs an array field \"atoms\"");
    }
    for (const auto& a : doc["atoms"]) {
        if (!a.is_object() || !a.contains("set") || !a.contains("x") || !a["x"].is_string()) {
            throw ParseError("atom needs \"set\" and string \"x\"");
        }
        const SubsetMask mask = mask_from_elements(read_int_array(a["set"]), x.n);
        const Rat w = rat_parse(a["x"].get<std::string>());
        if (w != 0) x.weights[mask] = w;
    }
    return x;
}

std::string serialize_atoms(const AtomDistribution& x) {
    ordered_json doc;
    doc["n"] = x.n;
    doc["atoms"] = json::array();
    for (const auto& [mask, w] : x.weights) {
        if (w == 0) continue;
        ordered_json a;
        a["set"] = set_to_json(mask);
        a["x"] = rat_str(w);
        doc["atoms"].push_back(std::move(a));
    }
    return doc.dump();
}

std::vector<std::pair<SubsetMask, SubsetMask>> check_monotone(const BooleInstance& inst) {
    std::vector<std::pair<SubsetMask, SubsetMask>> violations;
    const auto& members = inst.family.members;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            const SubsetMask s = members[i];
            const SubsetMask t = members[j];
            if ((s & t) == s && s != t && inst.b[i] < inst.b[j]) {
                violations.emplace_back(s, t);
            }
        }
    }
    return violations;
}

Rat marginal_of(const AtomDistribution& x, SubsetMask s) {
    Rat total = 0;
    for (const auto& [mask, w] : x.weights) {
        if ((mask & s) == s) total += w;
    }
    return total;
}

}  // namespace boole
