// Command-line front end over the tensor_atoms C API. Every subcommand is
// deterministic given its full flag set including --seed; exact values are
// printed as decimal strings and num/den fractions, never floats.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tensor_atoms.h"

namespace {

int exit_code(ta_status status) {
    switch (status) {
        case TA_OK:
            return 0;
        case TA_ERR_INPUT:
            return 2;
        case TA_ERR_CAP:
            return 3;
        case TA_ERR_STAT:
            return 4;
        default:
            return 1;
    }
}

int fail_with(ta_status status) {
    std::cerr << "error: " << ta_last_error() << "\n";
    return exit_code(status);
}

// Owned C string from the library.
struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { ta_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

bool write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return true;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open output path " << out_path << "\n";
        return false;
    }
    out << payload;
    return true;
}

// --cap flag wins, then TENSOR_ATOMS_CAP, then library default.
std::uint64_t resolve_cap(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TENSOR_ATOMS_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring invalid TENSOR_ATOMS_CAP\n";
        }
    }
    return 0;  // library default
}

// Weight text -> JSON array, numbers when they fit in 64 bits, decimal
// strings otherwise (mirrors the library's serialization policy).
nlohmann::json weight_text_to_json(const std::string& weight) {
    auto arr = nlohmann::json::array();
    std::string token;
    std::istringstream in(weight);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (used == token.size()) {
                arr.push_back(v);
                continue;
            }
        } catch (const std::exception&) {
        }
        arr.push_back(token);
    }
    return arr;
}

// Shift-normalized form of a weight string (for echoing the internal form).
nlohmann::json normalized_form(const std::string& weight) {
    OwnedString out;
    if (ta_weight_normalize(weight.c_str(), &out.ptr) != TA_OK) return nullptr;
    return weight_text_to_json(out.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Littlewood-Richardson measures, Gelfand-Tsetlin patterns and "
                 "their bound scans"};
    app.require_subcommand(1);

    std::string lambda, mu, out_path, format = "json";
    std::string spec_a, spec_b, dump_path;
    std::optional<std::uint64_t> cap_flag;
    std::uint64_t seed = 0, samples = 100000, count = 1;
    int n = 2, max_gap = 4, nmax = 8, k = 0, workers = 1;
    double significance = 0.001;

    auto* cmd_dim = app.add_subcommand("dim", "dimension d_lambda");
    cmd_dim->add_option("--lambda", lambda, "weight, e.g. 9,7,3")->required();

    auto* cmd_lr = app.add_subcommand("lr", "tensor product decomposition with exact atoms");
    cmd_lr->add_option("--lambda", lambda)->required();
    cmd_lr->add_option("--mu", mu)->required();
    cmd_lr->add_option("--out", out_path, "write payload to a file instead of stdout");
    cmd_lr->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_identity =
        app.add_subcommand("identity", "first-row max-convolution vs. nu_1 pushforward");
    cmd_identity->add_option("--lambda", lambda)->required();
    cmd_identity->add_option("--mu", mu)->required();
    cmd_identity->add_option("--cap", cap_flag, "enumeration cap (default 10^6)");
    cmd_identity->add_option("--out", out_path);

    auto* cmd_sample = app.add_subcommand("sample", "uniform Gelfand-Tsetlin patterns");
    cmd_sample->add_option("--lambda", lambda)->required();
    cmd_sample->add_option("--count", count);
    cmd_sample->add_option("--seed", seed);
    cmd_sample->add_option("--cap", cap_flag);
    cmd_sample->add_option("--out", out_path);

    auto* cmd_scan = app.add_subcommand("scan", "grid scans emitting CSV and a summary");
    bool scan_theorem = false, scan_firstrow = false, scan_saturation = false;
    cmd_scan->add_flag("--theorem", scan_theorem, "max-atom ratios against the two-gap scale");
    cmd_scan->add_flag("--firstrow", scan_firstrow, "marginal atom ratios against the k-gap");
    cmd_scan->add_flag("--saturation", scan_saturation, "one-row family (N,0,..) x (M,0,..)");
    cmd_scan->add_option("--n", n, "rank")->required();
    cmd_scan->add_option("--max-gap", max_gap, "largest lambda_1 - lambda_n on the grid");
    cmd_scan->add_option("--nmax", nmax, "largest N, M for --saturation");
    cmd_scan->add_option("--k", k, "restrict --firstrow to one k (default: all)");
    cmd_scan->add_option("--workers", workers);
    cmd_scan->add_option("--out", out_path, "CSV path; summary JSON goes to stdout");

    auto* cmd_rmt = app.add_subcommand("rmt", "corner-process Kolmogorov-Smirnov experiment");
    cmd_rmt->add_option("--spec-a", spec_a, "eigenvalues of A, e.g. 1,0,-1")->required();
    cmd_rmt->add_option("--spec-b", spec_b)->required();
    cmd_rmt->add_option("--samples", samples);
    cmd_rmt->add_option("--seed", seed);
    cmd_rmt->add_option("--significance", significance);
    cmd_rmt->add_option("--dump-samples", dump_path, "write raw sample streams as CSV");
    cmd_rmt->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    if (cmd_dim->parsed()) {
        OwnedString out;
        if (auto rc = ta_dim(lambda.c_str(), &out.ptr); rc != TA_OK) return fail_with(rc);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (cmd_lr->parsed()) {
        ta_lr* handle = nullptr;
        if (auto rc = ta_lr_compute(lambda.c_str(), mu.c_str(), &handle); rc != TA_OK)
            return fail_with(rc);
        OwnedString payload;
        ta_status rc;
        if (format == "csv") {
            rc = ta_lr_csv(handle, &payload.ptr);
        } else {
            rc = ta_lr_json(handle, &payload.ptr);
        }
        ta_lr_free(handle);
        if (rc != TA_OK) return fail_with(rc);
        std::string text = payload.str();
        if (format == "json") {
            auto j = nlohmann::json::parse(text);
            j["lambda_normalized"] = normalized_form(lambda);
            j["mu_normalized"] = normalized_form(mu);
            text = j.dump(2);
        }
        return write_output(text, out_path) ? 0 : 2;
    }

    if (cmd_identity->parsed()) {
        int equal = 0;
        OwnedString payload;
        if (auto rc = ta_identity_check(lambda.c_str(), mu.c_str(), resolve_cap(cap_flag),
                                        &equal, &payload.ptr);
            rc != TA_OK)
            return fail_with(rc);
        if (!write_output(nlohmann::json::parse(payload.str()).dump(2), out_path)) return 2;
        std::cerr << (equal ? "equal" : "unequal") << "\n";
        return 0;
    }

    if (cmd_sample->parsed()) {
        OwnedString payload;
        if (auto rc = ta_sample_patterns(lambda.c_str(), count, seed, resolve_cap(cap_flag),
                                         &payload.ptr);
            rc != TA_OK)
            return fail_with(rc);
        return write_output(nlohmann::json::parse(payload.str()).dump(2), out_path) ? 0 : 2;
    }

    if (cmd_scan->parsed()) {
        if (scan_theorem + scan_firstrow + scan_saturation != 1) {
            std::cerr << "error: pass exactly one of --theorem, --firstrow, --saturation\n";
            return 2;
        }
        OwnedString csv, summary;
        ta_status rc;
        if (scan_theorem) {
            rc = ta_scan_theorem(n, max_gap, workers, &csv.ptr, &summary.ptr);
        } else if (scan_firstrow) {
            rc = ta_scan_firstrow(n, max_gap, k, workers, &csv.ptr, &summary.ptr);
        } else {
            rc = ta_scan_saturation(n, nmax, &csv.ptr, &summary.ptr);
        }
        if (rc != TA_OK) return fail_with(rc);
        if (out_path.empty()) {
            std::cout << csv.str();
            std::cerr << summary.str() << "\n";
        } else {
            if (!write_output(csv.str(), out_path)) return 2;
            std::cout << nlohmann::json::parse(summary.str()).dump(2) << "\n";
        }
        return 0;
    }

    if (cmd_rmt->parsed()) {
        OwnedString payload;
        const auto rc =
            ta_rmt_experiment(spec_a.c_str(), spec_b.c_str(), samples, seed, significance,
                              dump_path.empty() ? nullptr : dump_path.c_str(), &payload.ptr);
        if (rc != TA_OK && rc != TA_ERR_STAT) return fail_with(rc);
        if (!write_output(nlohmann::json::parse(payload.str()).dump(2), out_path)) return 2;
        return exit_code(rc);
    }

    return 2;
}
