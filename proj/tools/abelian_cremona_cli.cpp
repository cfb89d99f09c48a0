#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/classify.hpp"
#include "cremona/explicit_group.hpp"
#include "cremona/extensions.hpp"
#include "cremona/group_expr.hpp"
#include "cremona/verify.hpp"

namespace {

using nlohmann::json;
using namespace cremona;

json verdict_to_json(const ClassificationVerdict& v) {
    json j;
    j["schema"] = 1;
    j["group"] = v.group.to_string();
    j["order"] = v.group.order();
    j["rank"] = v.group.rank();
    j["cr1"] = v.cr1;
    if (v.cr2) {
        json f;
        f["family"] = v.cr2->family;
        if (v.cr2->family == 1) {
            f["n"] = v.cr2->n;
            f["m"] = v.cr2->m;
        } else if (v.cr2->family == 2) {
            f["n"] = v.cr2->n;
        }
        j["cr2_family"] = f;
    } else {
        j["cr2_family"] = nullptr;
    }
    j["cr2_families"] = v.cr2_all_families;
    if (v.product_type) {
        json w;
        w["row"] = v.product_type->row;
        w["rows"] = v.product_type->all_rows;
        w["parameters"] = v.product_type->parameters;
        w["g1"] = v.product_type->g1.to_string();
        w["g2"] = v.product_type->g2.to_string();
        j["product_type"] = w;
    } else {
        j["product_type"] = nullptr;
    }
    json t;
    t["admissible"] = v.terminal.admissible;
    if (v.terminal.admissible) t["clause"] = v.terminal.clause;
    if (v.terminal.clause == "klein*2n*2m") {
        t["n"] = v.terminal.n;
        t["m"] = v.terminal.m;
    }
    j["terminal_admissible"] = t;
    j["elliptic_rows"] = json::array();
    for (const EllipticActionRow& r : v.elliptic_rows)
        j["elliptic_rows"].push_back({{"row", r.row},
                                      {"min_orbit", r.min_orbit},
                                      {"contains_antipodal", r.contains_antipodal}});
    j["circle_action"] = v.circle_action;
    j["sphere2_action"] = v.sphere2_action;
    j["k3_checked"] = v.k3_checked;
    if (v.k3)
        j["k3_type"] = {{"m", v.k3->m}, {"base", v.k3->base.to_string()}};
    else
        j["k3_type"] = nullptr;
    return j;
}

void print_verdict(std::ostream& out, const ClassificationVerdict& v) {
    out << "group: " << v.group.to_string() << "\n";
    out << "order: " << v.group.order() << "\n";
    out << "rank: " << v.group.rank() << "\n";
    out << "cr1: " << (v.cr1 ? "yes" : "no") << "\n";
    if (v.cr2) {
        out << "cr2_family: " << v.cr2->family;
        if (v.cr2->family == 1) out << " (n=" << v.cr2->n << ", m=" << v.cr2->m << ")";
        if (v.cr2->family == 2) out << " (n=" << v.cr2->n << ")";
        out << "\n";
    } else {
        out << "cr2_family: none\n";
    }
    if (v.product_type) {
        static const std::vector<std::vector<const char*>> param_names = {
            {}, {"k", "l", "m"}, {"k"}, {"k"}, {"k", "l"}, {"n"}, {}, {}};
        out << "product_type: row " << v.product_type->row;
        const auto& names = param_names[static_cast<std::size_t>(v.product_type->row)];
        if (!v.product_type->parameters.empty()) {
            out << " (";
            for (std::size_t i = 0; i < v.product_type->parameters.size(); ++i)
                out << (i ? ", " : "") << (i < names.size() ? names[i] : "?") << "="
                    << v.product_type->parameters[i];
            out << ")";
        }
        out << ", G1 = " << v.product_type->g1.to_string()
            << ", G2 = " << v.product_type->g2.to_string() << "\n";
    } else {
        out << "product_type: none\n";
    }
    out << "terminal_admissible: ";
    if (v.terminal.admissible) {
        out << "yes (" << v.terminal.clause;
        if (v.terminal.clause == "klein*2n*2m")
            out << ", n=" << v.terminal.n << ", m=" << v.terminal.m;
        out << ")\n";
    } else {
        out << "no\n";
    }
    if (v.elliptic_rows.empty()) {
        out << "elliptic_rows: none\n";
    } else {
        out << "elliptic_rows:";
        for (std::size_t i = 0; i < v.elliptic_rows.size(); ++i) {
            const auto& r = v.elliptic_rows[i];
            out << (i ? "; " : " ") << "row " << r.row << " (min_orbit=" << r.min_orbit
                << (r.contains_antipodal ? ", antipodal" : "") << ")";
        }
        out << "\n";
    }
    out << "circle_action: " << (v.circle_action ? "yes" : "no") << "\n";
    out << "sphere2_action: " << (v.sphere2_action ? "yes" : "no") << "\n";
    if (!v.k3_checked)
        out << "k3_type: not evaluated (no list supplied)\n";
    else if (v.k3)
        out << "k3_type: m=" << v.k3->m << ", base = " << v.k3->base.to_string() << "\n";
    else
        out << "k3_type: none relative to the supplied list\n";
}

int run_classify(const std::string& text, const std::string& k3_path, bool as_json) {
    const AbelianGroup g = parse_group(text);
    std::optional<std::vector<AbelianGroup>> k3;
    if (!k3_path.empty()) k3 = load_k3_list_file(k3_path);
    const ClassificationVerdict v = classify(g, k3 ? &*k3 : nullptr);
    if (as_json)
        std::cout << verdict_to_json(v).dump(2) << "\n";
    else
        print_verdict(std::cout, v);
    return 0;
}

int run_extensions(const std::string& h_text, const std::string& k_text, bool as_json,
                   std::optional<long long> cap) {
    const AbelianGroup h = parse_group(h_text);
    const AbelianGroup k = parse_group(k_text);
    std::optional<std::size_t> limit;
    if (cap) limit = static_cast<std::size_t>(*cap);
    const ExtensionResult result = enumerate_extensions(h, k, limit);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["sub"] = result.sub.to_string();
        j["quot"] = result.quot.to_string();
        j["middles"] = json::array();
        for (const ExtensionMiddle& m : result.middles)
            j["middles"].push_back({{"group", m.group.to_string()}, {"split", m.split}});
        j["truncated"] = result.truncated;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sub: " << result.sub.to_string() << "\n";
        std::cout << "quot: " << result.quot.to_string() << "\n";
        std::cout << "middles (" << result.middles.size()
                  << (result.truncated ? ", truncated" : "") << "):\n";
        for (const ExtensionMiddle& m : result.middles)
            std::cout << "  " << m.group.to_string() << (m.split ? " (split)" : "") << "\n";
    }
    return result.truncated ? 3 : 0;
}

int run_lr(const std::string& mu_text, const std::string& nu_text, bool as_json) {
    const Partition mu = parse_partition(mu_text);
    const Partition nu = parse_partition(nu_text);
    const PartitionMultiset product = lr_product(mu, nu);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["mu"] = mu.to_string();
        j["nu"] = nu.to_string();
        j["terms"] = json::array();
        for (auto it = product.rbegin(); it != product.rend(); ++it)
            j["terms"].push_back(
                {{"partition", it->first.to_string()}, {"coefficient", it->second}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << mu.to_string() << " * " << nu.to_string() << " =\n";
        for (auto it = product.rbegin(); it != product.rend(); ++it)
            std::cout << "  " << it->first.to_string() << ": " << it->second << "\n";
    }
    return 0;
}

int run_verify(std::vector<std::string> names, std::optional<long long> bound, bool as_json,
               const std::string& out_path) {
    if (names.empty()) names = check_names();
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<VerificationReport> reports;
    CheckOptions options;
    options.bound = bound;
    reports.reserve(names.size());
    for (const std::string& name : names) reports.push_back(run_check(name, options));

    json j;
    j["schema"] = 1;
    j["reports"] = json::array();
    bool all_pass = true;
    for (const VerificationReport& r : reports) {
        j["reports"].push_back(report_to_json(r));
        all_pass = all_pass && r.pass;
    }
    j["all_pass"] = all_pass;

    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        print_report_table(std::cout, reports);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write report file: " << out_path << "\n";
            return 2;
        }
        out << j.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite abelian group classification and extension toolkit"};
    app.require_subcommand(1);

    std::string classify_group, classify_k3;
    bool classify_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify a finite abelian group");
    classify_cmd->add_option("group", classify_group, "group expression, e.g. \"Z2^2 x Z4\"")
        ->required();
    classify_cmd->add_option("--k3-list", classify_k3, "file with one group per line");
    classify_cmd->add_flag("--json", classify_json, "emit JSON");

    std::string ext_h, ext_k;
    bool ext_json = false;
    std::optional<long long> ext_cap;
    auto* ext_cmd = app.add_subcommand("extensions", "enumerate abelian extension middles");
    ext_cmd->add_option("H", ext_h, "subgroup")->required();
    ext_cmd->add_option("K", ext_k, "quotient")->required();
    ext_cmd->add_flag("--json", ext_json, "emit JSON");
    ext_cmd->add_option("--cap", ext_cap, "truncate after this many middles");

    std::string lr_mu, lr_nu;
    bool lr_json = false;
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson product of two partitions");
    lr_cmd->add_option("mu", lr_mu, "partition, e.g. \"[2,2,1]\"")->required();
    lr_cmd->add_option("nu", lr_nu, "partition")->required();
    lr_cmd->add_flag("--json", lr_json, "emit JSON");

    std::vector<std::string> verify_names;
    std::optional<long long> verify_bound;
    bool verify_json = false;
    std::string verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification checks");
    verify_cmd->add_option("--check", verify_names, "check name (repeatable; default: all)");
    verify_cmd->add_option("--bound", verify_bound, "override the primary bound");
    verify_cmd->add_flag("--json", verify_json, "emit JSON");
    verify_cmd->add_option("--out", verify_out, "also write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (classify_cmd->parsed())
            return run_classify(classify_group, classify_k3, classify_json);
        if (ext_cmd->parsed()) return run_extensions(ext_h, ext_k, ext_json, ext_cap);
        if (lr_cmd->parsed()) return run_lr(lr_mu, lr_nu, lr_json);
        if (verify_cmd->parsed())
            return run_verify(verify_names, verify_bound, verify_json, verify_out);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const OracleBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
