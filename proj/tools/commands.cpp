#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "hurwitz/bounds.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/realtrop.hpp"
#include "hurwitz/symgroup.hpp"
#include "hurwitz/tropical.hpp"
#include "hurwitz/zigzag.hpp"

namespace hurwitz::cli {

namespace {

using nlohmann::json;

struct InstanceFlags {
    int genus = 0;
    std::string lambda;
    std::string mu;
};

struct Instance {
    int genus = 0;
    Partition lambda;
    Partition mu;

    std::string key() const {
        return "g=" + std::to_string(genus) + "|" + lambda.to_string() + "|" + mu.to_string();
    }
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::uint64_t budget = 0;
    ResultCache cache;
};

void add_instance(CLI::App* command, InstanceFlags& flags) {
    command->add_option("--g", flags.genus, "genus")->default_val(0);
    command->add_option("--lambda", flags.lambda, "ramification over 0, e.g. [2,1]")->required();
    command->add_option("--mu", flags.mu, "ramification over infinity")->required();
}

Instance parse_instance(const InstanceFlags& flags) {
    Instance instance{flags.genus, parse_partition(flags.lambda), parse_partition(flags.mu)};
    branch_count(instance.genus, instance.lambda, instance.mu);
    return instance;
}

SearchOptions search_options(const Context& ctx) {
    SearchOptions options;
    options.node_budget = ctx.budget;
    return options;
}

TropicalOptions tropical_options(const Context& ctx) {
    TropicalOptions options;
    options.node_budget = ctx.budget;
    return options;
}

HurwitzValue cached(Context& ctx, const std::string& key,
                    const std::function<HurwitzValue()>& compute) {
    if (auto hit = ctx.cache.get(key); hit && hit->is_string()) {
        return parse_rational(hit->get<std::string>());
    }
    const HurwitzValue value = compute();
    ctx.cache.put(key, to_string(value), ctx.budget);
    return value;
}

// Prints one value, or "a == b OK" / "a != b MISMATCH" for both routes.
int print_routes(Context& ctx, const std::string& route,
                 const std::function<HurwitzValue()>& group,
                 const std::function<HurwitzValue()>& tropical) {
    if (route == "group") {
        ctx.out << to_string(group()) << "\n";
        return kOk;
    }
    if (route == "tropical") {
        ctx.out << to_string(tropical()) << "\n";
        return kOk;
    }
    const HurwitzValue a = group();
    const HurwitzValue b = tropical();
    if (a == b) {
        ctx.out << to_string(a) << " == " << to_string(b) << " OK\n";
        return kOk;
    }
    ctx.out << to_string(a) << " != " << to_string(b) << " MISMATCH\n";
    return kVerificationFailed;
}

int cmd_hurwitz(Context& ctx, const InstanceFlags& flags, const std::string& route) {
    const Instance in = parse_instance(flags);
    return print_routes(
        ctx, route,
        [&] {
            return cached(ctx, "H_complex|group|" + in.key(), [&] {
                return complex_hurwitz(in.genus, in.lambda, in.mu, search_options(ctx));
            });
        },
        [&] {
            return cached(ctx, "H_complex|tropical|" + in.key(), [&] {
                return tropical_complex_hurwitz(in.genus, in.lambda, in.mu,
                                                tropical_options(ctx));
            });
        });
}

std::vector<int> parse_indices(const std::string& text) {
    std::vector<int> indices;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw ParseError("bad splitting index \"" + item + "\"");
        indices.push_back(value);
    }
    return indices;
}

int cmd_real(Context& ctx, const InstanceFlags& flags, const std::string& route,
             std::optional<int> s, std::optional<std::string> splitting_text) {
    const Instance in = parse_instance(flags);
    const int r = branch_count(in.genus, in.lambda, in.mu);
    auto group = [&](int size) {
        return cached(ctx, "H_real|group|" + in.key() + "|s=" + std::to_string(size), [&] {
            return real_hurwitz(in.genus, in.lambda, in.mu, size, search_options(ctx));
        });
    };
    auto tropical = [&](const Splitting& split) {
        return cached(ctx, "H_real|tropical|" + in.key() + "|split=" + split.to_string(), [&] {
            return real_tropical_hurwitz(in.genus, in.lambda, in.mu, split,
                                         tropical_options(ctx));
        });
    };
    auto check_s = [&](int size) {
        if (size < 0 || size > r) {
            throw PreconditionError("s = " + std::to_string(size) + " outside 0.." +
                                    std::to_string(r));
        }
    };

    if (splitting_text) {
        const Splitting split = Splitting::from_indices(r, parse_indices(*splitting_text));
        return print_routes(
            ctx, route, [&] { return group(split.size()); }, [&] { return tropical(split); });
    }
    if (s) {
        check_s(*s);
        return print_routes(
            ctx, route, [&] { return group(*s); },
            [&] { return tropical(Splitting::first(r, *s)); });
    }

    // The whole table, with the mirrored value beside each row.
    std::vector<HurwitzValue> values;
    int status = kOk;
    for (int size = 0; size <= r; ++size) {
        if (route == "tropical") {
            values.push_back(tropical(Splitting::first(r, size)));
            continue;
        }
        values.push_back(group(size));
        if (route == "both" && tropical(Splitting::first(r, size)) != values.back()) {
            ctx.err << "s = " << size << ": tropical value differs\n";
            status = kVerificationFailed;
        }
    }
    ctx.out << "s\tH_real(s)\tH_real(r-s)\tsymmetric\n";
    for (int size = 0; size <= r; ++size) {
        const bool symmetric = values[size] == values[r - size];
        if (!symmetric) status = kVerificationFailed;
        ctx.out << size << "\t" << to_string(values[size]) << "\t" << to_string(values[r - size])
                << "\t" << (symmetric ? "yes" : "no") << "\n";
    }
    return status;
}

json to_json(const BoundReport& report) {
    json h_real = json::array();
    for (const auto& v : report.H_real) h_real.push_back(to_string(v));
    return {{"genus", report.genus},
            {"lambda", report.lambda.to_string()},
            {"mu", report.mu.to_string()},
            {"Z", report.Z},
            {"Zprime", report.Zprime},
            {"E", report.E},
            {"H_real", h_real},
            {"H_complex", to_string(report.H_complex)},
            {"chain_ok", report.chain_ok},
            {"parity_ok", report.parity_ok},
            {"comparisons", report.comparisons}};
}

// Every failed check of one instance, as text.
std::vector<std::string> regression_failures(const Context& ctx, const Instance& in) {
    std::vector<std::string> failures;
    const int r = branch_count(in.genus, in.lambda, in.mu);
    const auto search = search_options(ctx);
    const auto tropical = tropical_options(ctx);
    const HurwitzValue h_c = complex_hurwitz(in.genus, in.lambda, in.mu, search);
    if (tropical_complex_hurwitz(in.genus, in.lambda, in.mu, tropical) != h_c) {
        failures.push_back("tropical complex count differs");
    }
    std::vector<HurwitzValue> h_r;
    for (int s = 0; s <= r; ++s) h_r.push_back(real_hurwitz(in.genus, in.lambda, in.mu, s, search));
    const auto by_split = real_tropical_by_splitting(in.genus, in.lambda, in.mu, tropical);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        Splitting split{std::vector<bool>(r)};
        for (int i = 0; i < r; ++i) split.positive[i] = (mask >> i) & 1u;
        const auto it = by_split.find(split);
        const HurwitzValue value = it == by_split.end() ? HurwitzValue(0) : it->second;
        if (value != h_r[split.size()]) {
            failures.push_back("tropical real count differs at splitting " + split.to_string());
        }
    }
    for (int s = 0; s <= r; ++s) {
        if (h_r[s] != h_r[r - s]) failures.push_back("H_real(s) != H_real(r-s) at s = " + std::to_string(s));
    }
    if (r > 0 && !in_excluded_family(in.lambda, in.mu)) {
        const auto report = verify_bounds(in.genus, in.lambda, in.mu, tropical);
        if (!report.chain_ok) failures.push_back("bound chain fails");
        if (!report.parity_ok) failures.push_back("parities differ");
    }
    return failures;
}

int cmd_verify_all_small(Context& ctx) {
    int instances = 0;
    int failed = 0;
    for (int d = 1; d <= 4; ++d) {
        const auto parts = partitions_of(d);
        for (int genus = 0; genus <= 2; ++genus) {
            for (const auto& lambda : parts) {
                for (const auto& mu : parts) {
                    const Instance in{genus, lambda, mu};
                    const int r = branch_count(genus, lambda, mu);
                    if (r < 1 || r > 5) continue;
                    ++instances;
                    std::vector<std::string> failures;
                    try {
                        failures = regression_failures(ctx, in);
                    } catch (const BudgetExceeded&) {
                        throw;
                    } catch (const Error& e) {
                        failures.push_back(e.what());
                    }
                    for (const auto& f : failures) ctx.out << in.key() << ": " << f << "\n";
                    if (!failures.empty()) ++failed;
                }
            }
        }
    }
    ctx.out << json{{"instances", instances}, {"failures", failed}}.dump() << "\n";
    return failed == 0 ? kOk : kVerificationFailed;
}

int cmd_verify(Context& ctx, const InstanceFlags& flags) {
    const Instance in = parse_instance(flags);
    const auto report = verify_bounds(in.genus, in.lambda, in.mu, tropical_options(ctx));
    ctx.out << to_json(report).dump(2) << "\n";
    return report.chain_ok && report.parity_ok ? kOk : kVerificationFailed;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

int cmd_render(Context& ctx, const InstanceFlags& flags, const std::string& out_dir,
               const std::string& kind, bool colourings) {
    const Instance in = parse_instance(flags);
    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create directory " + dir.string() +
                      (ec ? ": " + ec.message() : std::string()));
    }
    const auto covers = enumerate_covers(in.genus, in.lambda, in.mu, tropical_options(ctx));
    int written = 0;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        const auto& cover = covers[i];
        const CoverKind cover_kind = classify_cover(cover).kind;
        if ((kind == "zigzag" && cover_kind != CoverKind::Zigzag) ||
            (kind == "effective" && cover_kind != CoverKind::EffectiveNonZigzag) ||
            (kind == "other" && cover_kind != CoverKind::Other)) {
            continue;
        }
        char name[32];
        std::snprintf(name, sizeof name, "cover_%03zu", i + 1);
        if (!colourings) {
            write_file(dir / (std::string(name) + ".dot"), to_dot(cover, name));
            ++written;
            continue;
        }
        const auto rhos = enumerate_colourings(cover);
        for (std::size_t j = 0; j < rhos.size(); ++j) {
            const std::string file = std::string(name) + "_rho_" + std::to_string(j + 1);
            write_file(dir / (file + ".dot"), to_dot(cover, rhos[j], file));
            ++written;
        }
    }
    ctx.out << "wrote " << written << " file" << (written == 1 ? "" : "s") << " to "
            << dir.string() << "\n";
    return kOk;
}

json optional_json(const std::optional<double>& value) {
    return value ? json(*value) : json(nullptr);
}

std::optional<double> optional_double(const json& value) {
    if (value.is_null()) return std::nullopt;
    return value.get<double>();
}

json row_to_json(const SweepRow& row) {
    json h_real = json::array();
    for (const auto& v : row.H_real) h_real.push_back(to_string(v));
    return {{"in_scope", row.in_scope},
            {"Z", row.Z},
            {"Zprime", row.Zprime},
            {"E", row.E},
            {"H_complex", to_string(row.H_complex)},
            {"H_real", h_real},
            {"chain_ok", row.chain_ok},
            {"log_e", optional_json(row.log_e)},
            {"log_hC", optional_json(row.log_hC)},
            {"log_ratio_e", optional_json(row.log_ratio_e)},
            {"log_ratio_hC", optional_json(row.log_ratio_hC)}};
}

std::optional<SweepRow> row_from_json(int m, const json& j) {
    try {
        SweepRow row;
        row.m = m;
        row.computed = true;
        row.in_scope = j.at("in_scope").get<bool>();
        row.Z = j.at("Z").get<std::uint64_t>();
        row.Zprime = j.at("Zprime").get<std::uint64_t>();
        row.E = j.at("E").get<std::uint64_t>();
        row.H_complex = parse_rational(j.at("H_complex").get<std::string>());
        for (const auto& v : j.at("H_real")) row.H_real.push_back(parse_rational(v.get<std::string>()));
        row.chain_ok = j.at("chain_ok").get<bool>();
        row.log_e = optional_double(j.at("log_e"));
        row.log_hC = optional_double(j.at("log_hC"));
        row.log_ratio_e = optional_double(j.at("log_ratio_e"));
        row.log_ratio_hC = optional_double(j.at("log_ratio_hC"));
        return row;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string format_log(const std::optional<double>& value) {
    if (!value) return "";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.9f", *value);
    return buffer;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, int max_r) {
    std::ostringstream csv;
    csv << "m,Z,Zprime,E,H_complex";
    for (int s = 0; s <= max_r; ++s) csv << ",H_real_s" << s;
    csv << ",log_ratio_E,log_ratio_HC,chain\n";
    for (const auto& row : rows) {
        csv << row.m;
        if (!row.computed) {
            for (int i = 0; i < 4 + (max_r + 1) + 2; ++i) csv << ",absent";
            csv << ",absent\n";
            continue;
        }
        csv << "," << row.Z << "," << row.Zprime << "," << row.E << "," << to_string(row.H_complex);
        for (int s = 0; s <= max_r; ++s) {
            csv << ",";
            if (s < static_cast<int>(row.H_real.size())) csv << to_string(row.H_real[s]);
        }
        csv << "," << format_log(row.log_ratio_e) << "," << format_log(row.log_ratio_hC) << ","
            << (!row.in_scope ? "n/a" : row.chain_ok ? "OK" : "FAIL") << "\n";
    }
    return csv.str();
}

int cmd_sweep(Context& ctx, const InstanceFlags& flags, int m_max, const std::string& csv_path) {
    const Instance in = parse_instance(flags);
    if (m_max < 0) throw PreconditionError("--m-max must be nonnegative");
    SweepOptions options;
    options.node_budget = ctx.budget;
    auto key = [&](int m) { return "sweep_row|" + in.key() + "|m=" + std::to_string(m); };

    std::vector<std::optional<SweepRow>> slots(m_max + 1);
    std::vector<std::pair<int, std::future<SweepRow>>> pending;
    for (int m = 0; m <= m_max; ++m) {
        if (auto hit = ctx.cache.get(key(m))) slots[m] = row_from_json(m, *hit);
        if (slots[m]) continue;
        pending.emplace_back(m, std::async(std::launch::async, [&, m] {
                                 return sweep_row(in.genus, in.lambda, in.mu, m, options);
                             }));
    }
    for (auto& [m, future] : pending) {
        slots[m] = future.get();
        if (slots[m]->computed) ctx.cache.put(key(m), row_to_json(*slots[m]), ctx.budget);
    }

    std::vector<SweepRow> rows;
    for (auto& slot : slots) rows.push_back(std::move(*slot));
    const int max_r = branch_count(in.genus, extend_with_ones(in.lambda, m_max),
                                   extend_with_ones(in.mu, m_max));
    const std::string csv = sweep_csv(rows, max_r);

    int complete = -1;
    while (complete < m_max && rows[complete + 1].computed) ++complete;
    bool chain_failed = false;
    bool absent = false;
    for (const auto& row : rows) {
        if (!row.computed) {
            absent = true;
            ctx.err << "m = " << row.m << ": absent (" << row.error << ")\n";
        } else if (row.in_scope && !row.chain_ok) {
            chain_failed = true;
        }
    }
    std::ostringstream summary;
    summary << "rows: " << rows.size() << "; max m fully computed: "
            << (complete < 0 ? std::string("none") : std::to_string(complete)) << "\n";
    if (csv_path.empty()) {
        ctx.out << csv;
        ctx.err << summary.str();
    } else {
        write_file(csv_path, csv);
        ctx.out << summary.str();
    }
    if (chain_failed) return kVerificationFailed;
    return absent ? kBudget : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact complex, real and tropical double Hurwitz numbers", "hurwitz"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> budget;
    std::string cache_path;
    app.add_option("--budget", budget, "node budget (overrides HURWITZ_BUDGET)");
    app.add_option("--cache", cache_path, "JSON-lines result cache");

    InstanceFlags flags;
    std::string route = "group";
    const std::vector<std::string> routes{"group", "tropical", "both"};

    auto* hurwitz_cmd = app.add_subcommand("hurwitz", "complex double Hurwitz number");
    add_instance(hurwitz_cmd, flags);
    hurwitz_cmd->add_option("--route", route)->check(CLI::IsMember(routes));

    auto* real_cmd = app.add_subcommand("real", "real double Hurwitz numbers");
    add_instance(real_cmd, flags);
    real_cmd->add_option("--route", route)->check(CLI::IsMember(routes));
    std::optional<int> s;
    std::optional<std::string> splitting;
    auto* s_opt = real_cmd->add_option("--s", s, "number of positive branch points");
    real_cmd->add_option("--splitting", splitting, "1-based positive points, e.g. \"1,3,4\"")
        ->excludes(s_opt);

    auto* verify_cmd = app.add_subcommand("verify", "bound chain and parities as JSON");
    InstanceFlags verify_flags;
    auto* verify_g = verify_cmd->add_option("--g", verify_flags.genus)->default_val(0);
    auto* verify_l = verify_cmd->add_option("--lambda", verify_flags.lambda);
    auto* verify_m = verify_cmd->add_option("--mu", verify_flags.mu);
    bool all_small = false;
    auto* all_small_flag =
        verify_cmd->add_flag("--all-small", all_small, "regression over d <= 4, g <= 2, 1 <= r <= 5");
    all_small_flag->excludes(verify_l)->excludes(verify_m)->excludes(verify_g);

    auto* render_cmd = app.add_subcommand("render", "one DOT file per cover");
    add_instance(render_cmd, flags);
    std::string out_dir;
    std::string kind = "all";
    bool colourings = false;
    render_cmd->add_option("--out", out_dir, "output directory")->required();
    render_cmd->add_option("--class", kind)
        ->check(CLI::IsMember({"all", "zigzag", "effective", "other"}));
    render_cmd->add_flag("--colourings", colourings, "one file per real structure");

    auto* sweep_cmd = app.add_subcommand("sweep", "bounds sweep over ((lambda,1^m), (mu,1^m))");
    add_instance(sweep_cmd, flags);
    int m_max = 0;
    std::string csv_path;
    sweep_cmd->add_option("--m-max", m_max)->required();
    sweep_cmd->add_option("--csv", csv_path, "output file (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Context ctx{out, err, budget ? *budget : default_node_budget(),
                    ResultCache(cache_path, err)};
        if (*hurwitz_cmd) return cmd_hurwitz(ctx, flags, route);
        if (*real_cmd) return cmd_real(ctx, flags, route, s, splitting);
        if (*verify_cmd) {
            if (all_small) return cmd_verify_all_small(ctx);
            if (verify_flags.lambda.empty() || verify_flags.mu.empty()) {
                err << "verify needs --lambda and --mu, or --all-small\n";
                return kUsage;
            }
            return cmd_verify(ctx, verify_flags);
        }
        if (*render_cmd) return cmd_render(ctx, flags, out_dir, kind, colourings);
        if (*sweep_cmd) return cmd_sweep(ctx, flags, m_max, csv_path);
    } catch (const BudgetExceeded& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const HypothesisError& e) {
        err << "hypothesis error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace hurwitz::cli
