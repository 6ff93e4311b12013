// skewring: property queries, idempotent listings, claim verification,
// and counterexample search over finite skew polynomial rings.

#include <iostream>

#include <CLI11.hpp>

#include "skewring/claims.hpp"
#include "skewring/spec_parser.hpp"

namespace {

using namespace skewring;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string ring_spec;
    std::string endo_spec = "id";
    std::size_t degree = 1;
    std::size_t trunc = 2;
    std::vector<std::string> properties;
    std::string claim_id;
    std::string entry;
    std::string family = "all";
    std::size_t max_order = 16;
    bool json = false;
    bool timings = false;
    bool sampled = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

std::pair<RingPtr, EndoPtr> resolve_pair(const Options& opt) {
    // a bare registry name selects the entry's own sigma unless --endo
    // overrides it
    if (const RegistryEntry* e = find_registry_entry(opt.ring_spec)) {
        EndoPtr s = opt.endo_spec == "id" ? e->sigma : parse_endo_spec(opt.endo_spec, e->ring);
        return {e->ring, s};
    }
    RingPtr r = parse_ring_spec(opt.ring_spec);
    return {r, parse_endo_spec(opt.endo_spec, r)};
}

Json verdict_json(const PropertyVerdict& v, const FiniteRing& R) {
    Json j;
    j["property"] = v.property;
    j["holds"] = v.holds;
    Json w = Json::array();
    for (Elem e : v.witness) w.push_back(R.format(e));
    j["witness"] = v.holds ? Json() : w;
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (v.sampled) j["sampled"] = true;
    return j;
}

void print_verdict(const PropertyVerdict& v, const FiniteRing& R) {
    std::cout << v.property << ": " << (v.holds ? "holds" : "fails");
    if (!v.holds && !v.witness.empty()) {
        std::cout << "  witness:";
        for (Elem e : v.witness) std::cout << " " << R.format(e);
    }
    if (!v.detail.empty()) std::cout << "  (" << v.detail << ")";
    if (v.sampled) std::cout << "  [sampled]";
    std::cout << "\n";
}

int cmd_validate(const Options& opt) {
    auto [ring, sigma] = resolve_pair(opt);
    ScanPolicy policy;
    policy.seed = opt.seed;
    policy.allow_sampling = opt.sampled || ring->order() <= policy.pair_cap;
    std::vector<PropertyVerdict> verdicts;
    verdicts.push_back(validate_ring(*ring, policy));
    verdicts.push_back(Endomorphism::check(ring, sigma->map()));
    bool ok = true;
    Json arr = Json::array();
    for (const auto& v : verdicts) {
        ok = ok && v.holds;
        if (opt.json) arr.push_back(verdict_json(v, *ring));
        else print_verdict(v, *ring);
    }
    if (opt.json) {
        Json out;
        out["ring"] = ring->label();
        out["order"] = ring->order();
        out["sigma"] = sigma->label();
        out["axioms"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << ring->label() << ": order " << ring->order() << ", sigma " << sigma->label()
                  << (ok ? ", all axioms hold" : ", AXIOM VIOLATION") << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_props(const Options& opt) {
    auto [ring, sigma] = resolve_pair(opt);
    std::vector<std::pair<std::string, PropertyFn>> selected;
    if (opt.properties.empty()) {
        selected = property_table();
    } else {
        for (const auto& name : opt.properties) {
            const PropertyFn* fn = find_property(name);
            if (!fn) throw build_error("unknown property: " + name);
            selected.emplace_back(name, *fn);
        }
    }
    bool ok = true;
    Json arr = Json::array();
    for (const auto& [name, fn] : selected) {
        auto v = fn(ring, sigma);
        ok = ok && v.holds;
        if (opt.json) arr.push_back(verdict_json(v, *ring));
        else print_verdict(v, *ring);
    }
    if (opt.json) {
        Json out;
        out["ring"] = ring->label();
        out["sigma"] = sigma->label();
        out["properties"] = arr;
        std::cout << out.dump(2) << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_idempotents(const Options& opt) {
    auto [ring, sigma] = resolve_pair(opt);
    (void)sigma;
    auto ids = idempotents(*ring);
    if (opt.json) {
        Json arr = Json::array();
        for (Elem e : ids) arr.push_back(ring->format(e));
        Json out;
        out["ring"] = ring->label();
        out["count"] = ids.size();
        out["idempotents"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << ring->label() << ": " << ids.size() << " idempotents\n";
        for (Elem e : ids) std::cout << "  " << ring->format(e) << "\n";
    }
    return kExitPass;
}

int cmd_skew_idempotents(const Options& opt) {
    auto [ring, sigma] = resolve_pair(opt);
    auto found = find_idempotents_bounded(ring, sigma, opt.degree);
    if (opt.json) {
        Json arr = Json::array();
        for (const auto& e : found) {
            Json j;
            j["poly"] = e.str();
            j["coeffs"] = e.coeffs();
            arr.push_back(std::move(j));
        }
        Json out;
        out["ring"] = ring->label();
        out["sigma"] = sigma->label();
        out["degree"] = opt.degree;
        out["count"] = found.size();
        out["idempotents"] = arr;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << found.size() << " idempotents of degree <= " << opt.degree << " in "
                  << ring->label() << "[x;" << sigma->label() << "]\n";
        for (const auto& e : found) std::cout << "  " << e.str() << "\n";
    }
    return kExitPass;
}

int cmd_claim(const Options& opt) {
    Bounds bounds{opt.degree, opt.trunc};
    std::vector<ClaimReport> reports;
    auto run_entry = [&](const RegistryEntry& e) { reports.push_back(run_claim(opt.claim_id, e, bounds)); };
    if (!opt.entry.empty()) {
        const RegistryEntry* e = find_registry_entry(opt.entry);
        if (!e) throw build_error("unknown registry entry: " + opt.entry);
        run_entry(*e);
    } else {
        std::vector<const RegistryEntry*> entries;
        for (const auto& e : registry()) entries.push_back(&e);
        std::sort(entries.begin(), entries.end(),
                  [](auto* a, auto* b) { return a->name < b->name; });
        for (auto* e : entries) run_entry(*e);
    }
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        ok = ok && r.status != ClaimStatus::Fail;
        if (opt.json) {
            arr.push_back(report_to_json(r, opt.timings));
        } else {
            std::cout << r.claim << " on " << r.entry << ": " << to_string(r.status);
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
            if (!r.witness.is_null()) std::cout << "  witness: " << r.witness.dump() << "\n";
        }
    }
    if (opt.json) std::cout << arr.dump(2) << "\n";
    return ok ? kExitPass : kExitFail;
}

int cmd_verify_paper(const Options& opt) {
    Bounds bounds{opt.degree, opt.trunc};
    auto reports = verify_paper(bounds, opt.threads);
    if (opt.json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, opt.timings));
        std::cout << arr.dump(2) << "\n";
    } else {
        std::size_t pass = 0, fail = 0, na = 0, sur = 0;
        for (const auto& r : reports) {
            std::cout << r.claim << " on " << r.entry << ": " << to_string(r.status);
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
            switch (r.status) {
                case ClaimStatus::Pass: ++pass; break;
                case ClaimStatus::Fail: ++fail; break;
                case ClaimStatus::NotApplicable: ++na; break;
                case ClaimStatus::SurrogatePass: ++sur; break;
            }
        }
        std::cout << reports.size() << " reports: " << pass << " pass, " << sur
                  << " surrogate-pass, " << na << " not-applicable, " << fail << " fail\n";
    }
    return any_failed(reports) ? kExitFail : kExitPass;
}

int cmd_search(const Options& opt) {
    if (opt.properties.empty()) throw build_error("search needs at least one --property");
    // "!name" requires the property to FAIL; "name" requires it to hold
    std::vector<std::pair<std::string, bool>> wanted;
    for (const auto& raw : opt.properties) {
        bool negated = !raw.empty() && raw.front() == '!';
        std::string name = negated ? raw.substr(1) : raw;
        if (!find_property(name)) throw build_error("unknown property: " + name);
        wanted.emplace_back(name, !negated);
    }
    auto pairs = generate_pairs(opt.max_order, opt.family);
    Json arr = Json::array();
    std::size_t hits = 0;
    for (const auto& entry : pairs) {
        bool match = true;
        std::vector<PropertyVerdict> verdicts;
        for (const auto& [name, want] : wanted) {
            auto v = (*find_property(name))(entry.ring, entry.sigma);
            verdicts.push_back(v);
            if (v.holds != want) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        ++hits;
        if (opt.json) {
            Json j;
            j["name"] = entry.name;
            j["ring"] = entry.ring->label();
            j["order"] = entry.ring->order();
            j["sigma"] = entry.sigma->label();
            Json vs = Json::array();
            for (const auto& v : verdicts) vs.push_back(verdict_json(v, *entry.ring));
            j["verdicts"] = vs;
            arr.push_back(std::move(j));
        } else {
            std::cout << entry.name << "  (order " << entry.ring->order() << ", sigma "
                      << entry.sigma->label() << ")\n";
        }
    }
    if (opt.json) std::cout << arr.dump(2) << "\n";
    else std::cout << hits << " of " << pairs.size() << " pairs match\n";
    return hits > 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite skew polynomial ring workbench"};
    app.require_subcommand(1);
    Options opt;

    auto add_pair_flags = [&](CLI::App* cmd, bool ring_required) {
        auto* r = cmd->add_option("--ring", opt.ring_spec,
                                  "ring spec: Z(n), prod(..), mat(k,..), truncpoly(..,m), "
                                  "sub(..; e1, ..), ut2(..), ut2c(..), or a registry name");
        if (ring_required) r->required();
        cmd->add_option("--endo", opt.endo_spec,
                        "endomorphism spec: id, table(i:j,...), swap, negb, eval0, blockswap");
    };
    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "emit JSON instead of text");
        cmd->add_option("--seed", opt.seed, "seed for sampled scans");
        cmd->add_flag("--sampled", opt.sampled, "allow sampling when exhaustive scans exceed caps");
    };
    auto add_bounds_flags = [&](CLI::App* cmd) {
        cmd->add_option("--degree", opt.degree, "exact idempotent degree bound d");
        cmd->add_option("--trunc", opt.trunc, "truncation order m for the power-series surrogate");
    };

    auto* validate = app.add_subcommand("validate", "check the ring axioms and the sigma laws");
    add_pair_flags(validate, true);
    add_output_flags(validate);

    auto* props = app.add_subcommand("props", "evaluate properties of (ring, sigma)");
    add_pair_flags(props, true);
    props->add_option("--property", opt.properties, "property name(s); default: all");
    add_output_flags(props);

    auto* idem = app.add_subcommand("idempotents", "list Id(R)");
    add_pair_flags(idem, true);
    add_output_flags(idem);

    auto* skidem = app.add_subcommand("skew-idempotents",
                                      "list exact idempotents of R[x;sigma] up to --degree");
    add_pair_flags(skidem, true);
    add_bounds_flags(skidem);
    add_output_flags(skidem);

    auto* claim = app.add_subcommand("claim", "check one claim (C1..C12) against the registry");
    claim->add_option("id", opt.claim_id, "claim id, e.g. C3")->required();
    claim->add_option("--entry", opt.entry, "restrict to one registry entry");
    add_bounds_flags(claim);
    add_output_flags(claim);
    claim->add_flag("--timings", opt.timings, "include elapsed_ms in JSON output");

    auto* verify = app.add_subcommand("verify-paper", "run every claim against every entry");
    add_bounds_flags(verify);
    add_output_flags(verify);
    verify->add_option("--threads", opt.threads, "worker count (output is identical for any value)");
    verify->add_flag("--timings", opt.timings, "include elapsed_ms in JSON output");

    auto* search = app.add_subcommand("search",
                                      "scan generated (ring, sigma) pairs for property patterns");
    search->add_option("--property", opt.properties,
                       "required properties; prefix with '!' to require failure")
        ->required();
    search->add_option("--family", opt.family,
                       "zn, prod, ut2c, ut2, mat, truncpoly, registry, or all");
    search->add_option("--max-order", opt.max_order, "ring order cap for the scan");
    add_output_flags(search);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (props->parsed()) return cmd_props(opt);
        if (idem->parsed()) return cmd_idempotents(opt);
        if (skidem->parsed()) return cmd_skew_idempotents(opt);
        if (claim->parsed()) return cmd_claim(opt);
        if (verify->parsed()) return cmd_verify_paper(opt);
        if (search->parsed()) return cmd_search(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const build_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
