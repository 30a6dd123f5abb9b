#include "rollcall/reductions.hpp"

#include "rollcall/tiered.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rollcall {

namespace {

std::string zero_pad(std::size_t value, std::size_t width) {
    std::string s = std::to_string(value);
    while (s.size() < width) s.insert(s.begin(), '0');
    return s;
}

Ballot identity_order(int m) {
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    return Ballot::order_of(std::move(order));
}

}  // namespace

Instance reduce_qbf(const Qbf& q, BribeLimitForm form, Variant::Mode mode) {
    q.check();
    const int blocks = static_cast<int>(q.blocks.size());
    if (blocks % 2 != 1) throw MalformedQbf("reduce_qbf: block count must be odd");
    for (int i = 0; i < blocks; ++i) {
        const bool want_universal = i % 2 == 0;
        if ((q.blocks[i].quant == Qbf::Quant::universal) != want_universal)
            throw MalformedQbf(
                "reduce_qbf: quantifiers must alternate starting universal");
    }
    const int k = (blocks - 1) / 2;

    // preinsulated cousin, re-read as a tiered formula: block i's variables
    // become x[i,1..k_i] with the guard appended last
    const Qbf cousin = cousin_transform(q);
    std::vector<std::pair<int, int>> tier_of(cousin.var_count());
    int max_block_size = 0;
    for (int i = 0; i < blocks; ++i) {
        const auto& vars = cousin.blocks[i].vars;
        max_block_size = std::max(max_block_size, static_cast<int>(vars.size()));
        for (std::size_t j = 0; j < vars.size(); ++j)
            tier_of[vars[j]] = {i + 1, static_cast<int>(j) + 1};
    }
    TieredFormula tf;
    std::function<int(int)> translate = [&](int n) -> int {
        const auto& nd = cousin.matrix.nodes[n];
        switch (nd.op) {
            case Formula::Op::var:
                return tf.matrix.add_var(
                    tf.var_id(tier_of[nd.var].first, tier_of[nd.var].second));
            case Formula::Op::lnot: {
                const int a = translate(nd.a);
                return tf.matrix.add_not(a);
            }
            case Formula::Op::land: {
                const int a = translate(nd.a);
                const int b = translate(nd.b);
                return tf.matrix.add_and(a, b);
            }
            case Formula::Op::lor: {
                const int a = translate(nd.a);
                const int b = translate(nd.b);
                return tf.matrix.add_or(a, b);
            }
        }
        return -1;
    };
    tf.matrix.root = translate(cousin.matrix.root);

    // candidates: the formula name plus 2*max(k_i) fillers right above it
    const std::string c_name = tiered_encode(tf);
    const int fillers = 2 * max_block_size;
    Instance out;
    out.obs.candidates.names.push_back(c_name);
    const std::size_t suffix_width = std::to_string(fillers).size();
    for (int j = 1; j <= fillers; ++j)
        out.obs.candidates.names.push_back(c_name + "+" + zero_pad(j, suffix_width));

    const int m = out.obs.candidates.size();
    // voters 0..2k+1 in lexicographic = voting order; u = 0, ignored by the
    // election system (smallest name is excluded from the special list)
    const std::size_t name_width = std::to_string(2 * k + 1).size();
    out.obs.current.name = zero_pad(0, name_width);
    out.obs.current.ballot = identity_order(m);
    for (int i = 1; i <= 2 * k + 1; ++i) {
        VoterRecord v;
        v.name = zero_pad(static_cast<std::size_t>(i), name_width);
        out.obs.future.push_back(std::move(v));
    }

    // the briber likes candidates in the opposite of lexicographic order
    std::vector<int> sigma(m);
    for (int i = 0; i < m; ++i) sigma[i] = m - 1 - i;
    out.obs.sigma = Ballot::order_of(std::move(sigma));
    out.obs.designated = 0;  // d = c

    out.variant.mode = mode;
    out.variant.priced = false;
    out.variant.weighted = false;
    if (form == BribeLimitForm::fixed_cap)
        out.variant.bribe_cap = Nat(k);
    else
        out.obs.limit = Nat(k);

    out.rule = Rule::gadget(k, mode == Variant::Mode::constructive
                                   ? GadgetMode::all_win_on_true
                                   : GadgetMode::all_lose_on_true);
    validate_obs(out.obs, out.variant, out.rule);
    return out;
}

Instance reduce_manipulation(const ManipInstance& mi, int part) {
    if (part != 1 && part != 2)
        throw DomainError("reduce_manipulation: part must be 1 or 2");
    mi.candidates.check();
    mi.rule.check(mi.candidates.size());
    const int m = mi.candidates.size();
    if (mi.candidate < 0 || mi.candidate >= m)
        throw DomainError("reduce_manipulation: candidate out of range");
    if (part == 2) {
        if (mi.mode != Variant::Mode::constructive ||
            mi.winner_model != ManipInstance::WinnerModel::unique)
            throw DomainError(
                "reduce_manipulation: part 2 takes constructive unique-winner instances");
        if (m < 2)
            throw DomainError("reduce_manipulation: part 2 needs two candidates");
    }
    const std::size_t manip_n = mi.manipulator_weights.size();
    if (mi.nonmanipulators.empty() && manip_n == 0)
        throw DomainError("reduce_manipulation: no voters");
    if (mi.weighted)
        for (const auto& w : mi.manipulator_weights)
            if (w < 1)
                throw DomainError(
                    "reduce_manipulation: weighted manipulators need weight >= 1");

    Instance out;
    out.obs.candidates = mi.candidates;
    out.rule = mi.rule;
    out.variant.priced = false;
    out.variant.weighted = mi.weighted;

    // k = the manipulators' total weight: every one of them can be bribed
    Nat k = 0;
    for (const auto& w : mi.manipulator_weights) k += mi.weighted ? w : Nat(1);
    out.obs.limit = k;

    auto past_record = [&](const Vote& v) {
        VoterRecord r;
        r.name = v.voter;
        r.ballot = v.ballot;
        r.bribed = false;
        if (mi.weighted) r.weight = v.weight;
        return r;
    };

    std::set<std::string> names;
    for (const auto& v : mi.nonmanipulators)
        if (!names.insert(v.voter).second)
            throw DomainError("reduce_manipulation: duplicate voter name " + v.voter);

    if (manip_n == 0) {
        // nothing to control: the moment is the last nonmanipulator, budget 0
        for (std::size_t i = 0; i + 1 < mi.nonmanipulators.size(); ++i)
            out.obs.past.push_back(past_record(mi.nonmanipulators[i]));
        const Vote& last = mi.nonmanipulators.back();
        out.obs.current.name = last.voter;
        out.obs.current.ballot = last.ballot;
        if (mi.weighted) out.obs.current.weight = last.weight;
    } else {
        for (const auto& v : mi.nonmanipulators)
            out.obs.past.push_back(past_record(v));
        const std::size_t width = std::to_string(manip_n).size();
        auto manip_name = [&](std::size_t i) {
            std::string n = "m" + zero_pad(i + 1, width);
            if (names.count(n))
                throw DomainError("reduce_manipulation: voter name collision on " + n);
            return n;
        };
        out.obs.current.name = manip_name(0);
        out.obs.current.ballot = identity_order(m);  // irrelevant vote
        if (mi.weighted) out.obs.current.weight = mi.manipulator_weights[0];
        for (std::size_t i = 1; i < manip_n; ++i) {
            VoterRecord v;
            v.name = manip_name(i);
            if (mi.weighted) v.weight = mi.manipulator_weights[i];
            out.obs.future.push_back(std::move(v));
        }
    }

    std::vector<int> sigma;
    if (part == 1 && mi.mode == Variant::Mode::destructive) {
        // despised candidate last
        for (int c = 0; c < m; ++c)
            if (c != mi.candidate) sigma.push_back(c);
        sigma.push_back(mi.candidate);
        out.variant.mode = Variant::Mode::destructive;
        out.obs.designated = mi.candidate;
    } else {
        // preferred candidate first
        sigma.push_back(mi.candidate);
        for (int c = 0; c < m; ++c)
            if (c != mi.candidate) sigma.push_back(c);
        if (part == 1) {
            out.variant.mode = Variant::Mode::constructive;
            out.obs.designated = mi.candidate;
        } else {
            // unique-winner power comes from the destructive goal with the
            // runner-up designated
            out.variant.mode = Variant::Mode::destructive;
            out.obs.designated = sigma[1];
        }
    }
    out.obs.sigma = Ballot::order_of(std::move(sigma));
    validate_obs(out.obs, out.variant, out.rule);
    return out;
}

Instance reduce_online_manipulation(const OnlineManipInstance& omi) {
    if (omi.past_manipulators.size() != omi.obs.past.size() ||
        omi.future_manipulators.size() != omi.obs.future.size())
        throw DomainError("reduce_online_manipulation: flag lists mismatch voters");

    Instance out;
    out.obs = omi.obs;
    out.rule = omi.rule;
    out.variant.mode = omi.mode;
    out.variant.priced = true;
    out.variant.weighted = omi.weighted;

    const auto price_of = [](bool manip) { return Nat(manip ? 0 : 1); };
    for (std::size_t i = 0; i < out.obs.past.size(); ++i)
        out.obs.past[i].price = price_of(omi.past_manipulators[i]);
    out.obs.current.price = price_of(omi.current_manipulator);
    for (std::size_t i = 0; i < out.obs.future.size(); ++i)
        out.obs.future[i].price = price_of(omi.future_manipulators[i]);
    out.obs.limit = Nat(0);
    validate_obs(out.obs, out.variant, out.rule);
    return out;
}

Instance reduce_partition(const std::vector<Nat>& values, Variant::Mode mode) {
    if (values.empty()) throw DomainError("reduce_partition: empty value list");
    Nat total = 0;
    for (const auto& s : values) {
        if (s < 0) throw DomainError("reduce_partition: negative value");
        total += s;
    }

    Instance out;
    out.obs.candidates.names = {"c", "d"};
    const CandidateId cand_c = 0, cand_d = 1;
    out.rule = Rule::plurality(2);
    out.variant.priced = true;
    out.variant.weighted = true;
    out.variant.mode = mode;
    out.obs.sigma = Ballot::order_of({cand_d, cand_c});  // d preferred to c
    out.obs.limit = total / 2;  // odd totals leave the instance unsatisfiable

    const std::size_t width = std::to_string(values.size()).size();
    auto voter = [&](std::size_t i) {
        VoterRecord v;
        v.name = "v" + zero_pad(i + 1, width);
        v.price = values[i];
        v.weight = values[i];
        return v;
    };
    out.obs.current = voter(0);
    out.obs.current.ballot = Ballot::order_of({cand_c, cand_d});  // u votes for c
    for (std::size_t i = 1; i < values.size(); ++i)
        out.obs.future.push_back(voter(i));

    if (mode == Variant::Mode::constructive) {
        out.obs.designated = cand_d;
    } else {
        // one unbribed weight-1 voter for d already on record; c designated
        VoterRecord seed;
        seed.name = "a0";
        seed.price = 1;
        seed.weight = 1;
        seed.ballot = Ballot::order_of({cand_d, cand_c});
        seed.bribed = false;
        out.obs.past.push_back(std::move(seed));
        out.obs.designated = cand_c;
    }
    validate_obs(out.obs, out.variant, out.rule);
    return out;
}

}  // namespace rollcall
