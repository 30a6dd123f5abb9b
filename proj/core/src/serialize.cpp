#include "rollcall/serialize.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>

namespace rollcall {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& why) {
    throw ParseError(path, why);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) bad(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(path + "." + key, "missing field");
    return *it;
}

const Json* opt_field(const Json& obj, const char* key) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

Nat read_nat(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0) bad(path, "negative number");
        return Nat(v);
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) bad(path, "empty numeric string");
        for (char c : s)
            if (c < '0' || c > '9') bad(path, "not a decimal string");
        return Nat(s);
    }
    bad(path, "expected a nonnegative integer (number or decimal string)");
}

Json write_nat(const Nat& n) {
    if (n <= Nat(std::numeric_limits<std::uint64_t>::max()))
        return Json(n.convert_to<std::uint64_t>());
    return Json(n.str());
}

std::string read_string(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

bool read_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) bad(path, "expected a boolean");
    return j.get<bool>();
}

Ballot read_ballot(const Json& j, const std::string& path, const Rule& rule,
                   const Candidates& cands) {
    if (!j.is_array()) bad(path, "expected an array");
    if (rule.ballot_kind() == BallotKind::order) {
        std::vector<int> order;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string name =
                read_string(j[i], path + "[" + std::to_string(i) + "]");
            const CandidateId c = cands.index_of(name);
            if (c < 0) bad(path + "[" + std::to_string(i) + "]",
                           "unknown candidate: " + name);
            order.push_back(c);
        }
        return Ballot::order_of(std::move(order));
    }
    std::vector<int> flags;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_number_integer() || (e.get<std::int64_t>() != 0 && e.get<std::int64_t>() != 1))
            bad(path + "[" + std::to_string(i) + "]", "expected 0 or 1");
        flags.push_back(static_cast<int>(e.get<std::int64_t>()));
    }
    return Ballot::approval_of(std::move(flags));
}

Json write_ballot(const Ballot& b, const Candidates& cands) {
    Json out = Json::array();
    if (b.kind == BallotKind::order)
        for (int c : b.slots) out.push_back(cands.name(c));
    else
        for (int f : b.slots) out.push_back(f);
    return out;
}

VoterRecord read_voter(const Json& j, const std::string& path, const Variant& variant,
                       const Rule& rule, const Candidates& cands, bool with_ballot,
                       bool with_bribed) {
    VoterRecord v;
    v.name = read_string(field(j, path, "name"), path + ".name");
    if (variant.priced)
        v.price = read_nat(field(j, path, "price"), path + ".price");
    else if (opt_field(j, "price"))
        bad(path + ".price", "price in an unpriced variant");
    if (variant.weighted)
        v.weight = read_nat(field(j, path, "weight"), path + ".weight");
    else if (opt_field(j, "weight"))
        bad(path + ".weight", "weight in an unweighted variant");
    if (with_ballot)
        v.ballot = read_ballot(field(j, path, "ballot"), path + ".ballot", rule, cands);
    else if (opt_field(j, "ballot"))
        bad(path + ".ballot", "future voters carry no ballot");
    if (with_bribed)
        v.bribed = read_bool(field(j, path, "bribed"), path + ".bribed");
    else if (opt_field(j, "bribed"))
        bad(path + ".bribed", "only past voters carry the bribed flag");
    return v;
}

Json write_voter(const VoterRecord& v, const Candidates& cands) {
    Json out = Json::object();
    out["name"] = v.name;
    if (v.price) out["price"] = write_nat(*v.price);
    if (v.weight) out["weight"] = write_nat(*v.weight);
    if (v.ballot) out["ballot"] = write_ballot(*v.ballot, cands);
    if (v.bribed) out["bribed"] = *v.bribed;
    return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("", e.what());
    }
    Instance inst;

    const Json& jv = field(doc, "", "variant");
    const std::string mode = read_string(field(jv, "variant", "mode"), "variant.mode");
    if (mode == "constructive")
        inst.variant.mode = Variant::Mode::constructive;
    else if (mode == "destructive")
        inst.variant.mode = Variant::Mode::destructive;
    else
        bad("variant.mode", "expected constructive or destructive");
    inst.variant.priced = read_bool(field(jv, "variant", "priced"), "variant.priced");
    inst.variant.weighted =
        read_bool(field(jv, "variant", "weighted"), "variant.weighted");
    if (const Json* cap = opt_field(jv, "bribe_cap"))
        inst.variant.bribe_cap = read_nat(*cap, "variant.bribe_cap");
    if (const Json* k = opt_field(jv, "k")) inst.obs.limit = read_nat(*k, "variant.k");

    const Json& jr = field(doc, "", "rule");
    const std::string kind = read_string(field(jr, "rule", "kind"), "rule.kind");
    if (kind == "scoring") {
        const Json& ja = field(jr, "rule", "alpha");
        if (!ja.is_array()) bad("rule.alpha", "expected an array");
        std::vector<Nat> alpha;
        for (std::size_t i = 0; i < ja.size(); ++i)
            alpha.push_back(read_nat(ja[i], "rule.alpha[" + std::to_string(i) + "]"));
        inst.rule = Rule::scoring(std::move(alpha));
    } else if (kind == "approval") {
        inst.rule = Rule::approval();
    } else if (kind == "gadget") {
        const Nat k = read_nat(field(jr, "rule", "gadget_k"), "rule.gadget_k");
        if (!fits_size_t(k, 1u << 20)) bad("rule.gadget_k", "implausibly large");
        GadgetMode gm = GadgetMode::all_win_on_true;
        if (const Json* jm = opt_field(jr, "gadget_mode")) {
            const std::string s = read_string(*jm, "rule.gadget_mode");
            if (s == "all_win_on_true")
                gm = GadgetMode::all_win_on_true;
            else if (s == "all_lose_on_true")
                gm = GadgetMode::all_lose_on_true;
            else
                bad("rule.gadget_mode", "expected all_win_on_true or all_lose_on_true");
        }
        inst.rule = Rule::gadget(static_cast<int>(to_size_t(k)), gm);
    } else {
        bad("rule.kind", "expected scoring, approval or gadget");
    }

    const Json& jc = field(doc, "", "candidates");
    if (!jc.is_array()) bad("candidates", "expected an array");
    for (std::size_t i = 0; i < jc.size(); ++i)
        inst.obs.candidates.names.push_back(
            read_string(jc[i], "candidates[" + std::to_string(i) + "]"));
    try {
        inst.obs.candidates.check();
        inst.rule.check(inst.obs.candidates.size());
    } catch (const DomainError& e) {
        bad("candidates", e.what());
    }

    {
        const Json& js = field(doc, "", "sigma");
        if (!js.is_array()) bad("sigma", "expected an array");
        std::vector<int> order;
        for (std::size_t i = 0; i < js.size(); ++i) {
            const std::string name = read_string(js[i], "sigma[" + std::to_string(i) + "]");
            const CandidateId c = inst.obs.candidates.index_of(name);
            if (c < 0) bad("sigma[" + std::to_string(i) + "]", "unknown candidate: " + name);
            order.push_back(c);
        }
        inst.obs.sigma = Ballot::order_of(std::move(order));
    }
    {
        const std::string name = read_string(field(doc, "", "d"), "d");
        inst.obs.designated = inst.obs.candidates.index_of(name);
        if (inst.obs.designated < 0) bad("d", "unknown candidate: " + name);
    }

    const Json& jp = field(doc, "", "past");
    if (!jp.is_array()) bad("past", "expected an array");
    for (std::size_t i = 0; i < jp.size(); ++i)
        inst.obs.past.push_back(read_voter(jp[i], "past[" + std::to_string(i) + "]",
                                           inst.variant, inst.rule,
                                           inst.obs.candidates, true, true));
    inst.obs.current = read_voter(field(doc, "", "current"), "current", inst.variant,
                                  inst.rule, inst.obs.candidates, true, false);
    const Json& jf = field(doc, "", "future");
    if (!jf.is_array()) bad("future", "expected an array");
    for (std::size_t i = 0; i < jf.size(); ++i)
        inst.obs.future.push_back(read_voter(jf[i], "future[" + std::to_string(i) + "]",
                                             inst.variant, inst.rule,
                                             inst.obs.candidates, false, false));

    validate_obs(inst.obs, inst.variant, inst.rule);
    return inst;
}

std::string serialize_instance(const Instance& inst, int indent) {
    Json doc = Json::object();
    Json jv = Json::object();
    jv["mode"] = inst.variant.mode == Variant::Mode::constructive ? "constructive"
                                                                  : "destructive";
    jv["priced"] = inst.variant.priced;
    jv["weighted"] = inst.variant.weighted;
    if (inst.variant.bribe_cap) jv["bribe_cap"] = write_nat(*inst.variant.bribe_cap);
    if (inst.obs.limit) jv["k"] = write_nat(*inst.obs.limit);
    doc["variant"] = std::move(jv);

    Json jr = Json::object();
    switch (inst.rule.kind) {
        case Rule::Kind::scoring: {
            jr["kind"] = "scoring";
            Json ja = Json::array();
            for (const auto& a : inst.rule.alpha) ja.push_back(write_nat(a));
            jr["alpha"] = std::move(ja);
            break;
        }
        case Rule::Kind::approval:
            jr["kind"] = "approval";
            break;
        case Rule::Kind::gadget:
            jr["kind"] = "gadget";
            jr["gadget_k"] = inst.rule.gadget_k;
            jr["gadget_mode"] = inst.rule.gadget_mode == GadgetMode::all_win_on_true
                                    ? "all_win_on_true"
                                    : "all_lose_on_true";
            break;
    }
    doc["rule"] = std::move(jr);

    doc["candidates"] = inst.obs.candidates.names;
    doc["sigma"] = write_ballot(inst.obs.sigma, inst.obs.candidates);
    doc["d"] = inst.obs.candidates.name(inst.obs.designated);

    Json jp = Json::array();
    for (const auto& v : inst.obs.past) jp.push_back(write_voter(v, inst.obs.candidates));
    doc["past"] = std::move(jp);
    doc["current"] = write_voter(inst.obs.current, inst.obs.candidates);
    Json jf = Json::array();
    for (const auto& v : inst.obs.future)
        jf.push_back(write_voter(v, inst.obs.candidates));
    doc["future"] = std::move(jf);

    return indent > 0 ? doc.dump(indent) : doc.dump();
}

std::string instance_digest(const Instance& inst) {
    const std::string text = serialize_instance(inst, 0);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace rollcall
