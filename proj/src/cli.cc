#include <semiring/cli.hh>
#include <semiring/enumerate.hh>
#include <semiring/green.hh>
#include <semiring/io.hh>
#include <semiring/report.hh>
#include <semiring/theorems.hh>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace fs = std::filesystem;

using nlohmann::ordered_json;
using std::optional;
using std::string;
using std::vector;

namespace semiring
{
    namespace
    {
        struct Config
        {
            string convention = "standard";
            string format = "text";
            int jobs = 1;
            int congruence_cap = default_congruence_cap;
            int isomorphism_cap = default_isomorphism_cap;
            bool malcev_cross_check = false;

            [[nodiscard]] auto options() const -> ClassifyOptions
            {
                ClassifyOptions o;
                o.convention = parse_convention(convention);
                o.congruence_cap = congruence_cap;
                o.isomorphism_cap = isomorphism_cap;
                o.malcev_cross_check = malcev_cross_check;
                return o;
            }

            [[nodiscard]] auto json() const -> bool { return format == "json"; }
        };

        auto convention_note(const Config & config, std::ostream & err) -> void
        {
            if (parse_convention(config.convention) == Convention::Standard)
                err << "note: LZ/RZ names follow the standard convention (LZ+ is x + y = x); "
                    "the table1 convention swaps them (--convention table1)\n";
            else
                err << "note: LZ/RZ names follow the table1 convention (LZ+ is x + y = y); "
                    "the standard convention swaps them\n";
        }

        auto sha256_hex(const string & data) -> string
        {
            unsigned char digest[EVP_MAX_MD_SIZE];
            unsigned int length = 0;
            if (! EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr))
                throw Error("sha256 failed");
            std::ostringstream out;
            for (unsigned i = 0 ; i < length ; ++i)
                out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
            return out.str();
        }

        auto pair_list(const Relation & r) -> string
        {
            string s = r.to_string();
            return s.empty() ? "(none)" : s;
        }

        auto strip_pairs(const Relation & r) -> Relation
        {
            // quasi-orders print without their reflexive pairs
            Relation result = r;
            for (Element a = 0 ; a < r.order() ; ++a)
                result.set(a, a, false);
            return result;
        }

        // validate ------------------------------------------------------------------------------

        auto cmd_validate(const string & file, std::ostream & out) -> int
        {
            try {
                auto s = read_semiring_file(file);
                out << "valid: order " << s.order() << '\n';
                return exit_code::ok;
            }
            catch (const AxiomError & e) {
                out << "invalid: " << file << '\n';
                for (auto & v : e.violations())
                    out << "  " << v.to_string() << '\n';
                return exit_code::invalid;
            }
        }

        // classify ------------------------------------------------------------------------------

        auto cmd_classify(const Config & config, const string & file, bool all, const vector<string> & predicates,
                const vector<string> & theorems, std::ostream & out, std::ostream & err) -> int
        {
            auto options = config.options();
            auto s = read_semiring_file(file);
            convention_note(config, err);

            vector<string> chosen_predicates = predicates, chosen_theorems = theorems;
            if (all || (predicates.empty() && theorems.empty())) {
                chosen_predicates = predicate_names(options.convention);
                if (all)
                    for (auto & info : theorem_catalog())
                        chosen_theorems.push_back(info.id);
            }
            auto report = classification_report(s, fs::path(file).filename().string(), chosen_predicates, chosen_theorems, options, config.jobs);
            out << (config.json() ? to_json(report) : to_text(report));
            return report.any_theorem_failed() ? exit_code::theorem_violation : exit_code::ok;
        }

        // relations -----------------------------------------------------------------------------

        auto cmd_relations(const Config & config, const string & file, const string & reduct, std::ostream & out) -> int
        {
            auto s = read_semiring_file(file);
            bool additive = reduct == "add";
            auto g = green(additive ? s.add_table() : s.mul_table());
            string mark = additive ? "+" : "*";

            ordered_json doc;
            doc["reduct"] = reduct;
            vector<std::pair<string, const Partition *>> parts = { { "L", &g.L }, { "R", &g.R }, { "H", &g.H }, { "D", &g.D }, { "J", &g.J } };
            for (auto & [name, p] : parts)
                doc["green"][name + mark] = p->to_string();

            if (is_idempotent_semiring(s)) {
                auto q = quasi_orders(s);
                if (additive) {
                    doc["quasi_orders"]["<=l+"] = pair_list(strip_pairs(q.left_add));
                    doc["quasi_orders"]["<=r+"] = pair_list(strip_pairs(q.right_add));
                    doc["quasi_orders"]["<=+"] = pair_list(strip_pairs(q.add));
                    doc["band_formulas_agree"] = band_d_check(s) && band_l_formula(s) == g.L.to_relation()
                        && band_r_formula(s) == g.R.to_relation();
                }
                else {
                    doc["quasi_orders"]["<=l*"] = pair_list(strip_pairs(q.left_mul));
                    doc["quasi_orders"]["<=r*"] = pair_list(strip_pairs(q.right_mul));
                    doc["quasi_orders"]["<=*"] = pair_list(strip_pairs(q.mul));
                }
            }
            else
                doc["quasi_orders"] = "not defined (not an idempotent semiring)";

            if (config.json()) {
                out << doc.dump(2) << '\n';
                return exit_code::ok;
            }
            out << "reduct: " << reduct << '\n';
            for (auto & [name, p] : parts)
                out << name << mark << ": " << p->to_string() << '\n';
            if (doc["quasi_orders"].is_string())
                out << "quasi-orders: " << doc["quasi_orders"].get<string>() << '\n';
            else
                for (auto & [name, value] : doc["quasi_orders"].items())
                    out << name << ": " << value.get<string>() << '\n';
            if (doc.contains("band_formulas_agree"))
                out << "band formulas agree: " << (doc["band_formulas_agree"].get<bool>() ? "true" : "false") << '\n';
            return exit_code::ok;
        }

        // congruences ---------------------------------------------------------------------------

        struct CongruenceFlags
        {
            bool least_dl = false, sigma = false, eta = false, nu = false, lambda = false, all = false;
        };

        auto cmd_congruences(const Config & config, const string & file, CongruenceFlags flags, std::ostream & out) -> int
        {
            auto s = read_semiring_file(file);
            if (flags.all)
                flags = CongruenceFlags{ true, true, true, true, true, true };
            if (! (flags.least_dl || flags.sigma || flags.eta || flags.nu || flags.lambda))
                flags.least_dl = true;

            vector<std::pair<string, string>> lines;
            auto not_applicable = [&] (const string & name, const string & why) { lines.emplace_back(name, "not applicable (" + why + ")"); };

            if (flags.least_dl)
                lines.emplace_back("least-dl", least_dl_congruence(s).to_string());
            if (flags.sigma) {
                if (is_idempotent_semiring(s)) {
                    auto r = sigma(s);
                    lines.emplace_back("sigma", r.is_equivalence() ? r.to_partition().to_string() : pair_list(r));
                }
                else
                    not_applicable("sigma", "needs an idempotent semiring");
            }
            if (flags.eta) {
                if (is_idempotent_semiring(s))
                    lines.emplace_back("eta", eta(s).to_string());
                else
                    not_applicable("eta", "needs an idempotent semiring");
            }
            if (flags.nu) {
                if (is_orthoring(s))
                    lines.emplace_back("nu+", nu_plus(s).to_string());
                else
                    not_applicable("nu+", "needs an orthoring");
            }
            if (flags.lambda) {
                if (is_band_orthoring(s)) {
                    auto l = lambda12(s);
                    lines.emplace_back("lambda1", l.lambda1.to_string());
                    lines.emplace_back("lambda2", l.lambda2.to_string());
                }
                else
                    not_applicable("lambda", "needs a band orthoring");
            }
            vector<string> lattice;
            if (flags.all) {
                if (s.order() <= config.congruence_cap)
                    for (auto & c : all_congruences(s, config.congruence_cap))
                        lattice.push_back(c.to_string());
                else
                    not_applicable("lattice", "order above the congruence cap");
            }

            if (config.json()) {
                ordered_json doc;
                for (auto & [name, value] : lines)
                    doc[name] = value;
                if (! lattice.empty())
                    doc["lattice"] = lattice;
                out << doc.dump(2) << '\n';
                return exit_code::ok;
            }
            for (auto & [name, value] : lines)
                out << name << ": " << value << '\n';
            if (! lattice.empty()) {
                out << "lattice: " << lattice.size() << " congruences\n";
                for (auto & c : lattice)
                    out << "  " << c << '\n';
            }
            return exit_code::ok;
        }

        // decompose -----------------------------------------------------------------------------

        auto cmd_decompose(const Config & config, const string & file, const string & theorem, std::ostream & out, std::ostream & err) -> int
        {
            auto s = read_semiring_file(file);
            convention_note(config, err);
            auto result = verify_theorem(s, theorem, config.options());
            if (config.json()) {
                ClassificationReport report;
                report.id = fs::path(file).filename().string();
                report.order = s.order();
                report.theorems.push_back(result);
                out << to_json(report);
            }
            else
                out << theorem_result_text(result, true);
            return result.status == TheoremStatus::Fail ? exit_code::theorem_violation : exit_code::ok;
        }

        // enumerate -----------------------------------------------------------------------------

        struct EnumerateArgs
        {
            int order = 0;
            bool idempotent = false, idempotent_add = false, idempotent_mul = false;
            bool completely_regular = false, orthoring = false;
            vector<string> identities;
            long cap = 0;
            string shard, resume, out_dir, fixed_add;
        };

        auto cmd_enumerate(const Config & config, const EnumerateArgs & args, std::ostream & out) -> int
        {
            EnumSpec spec;
            spec.order = args.order;
            spec.idempotent_add = args.idempotent || args.idempotent_add;
            spec.idempotent_mul = args.idempotent || args.idempotent_mul;
            spec.completely_regular = args.completely_regular;
            spec.orthoring = args.orthoring;
            for (auto & text : args.identities)
                spec.identities.push_back(parse_identity(text));
            if (args.cap > 0)
                spec.cap = args.cap;
            if (! args.shard.empty()) {
                auto slash = args.shard.find('/');
                if (slash == string::npos)
                    throw Error("--shard expects k/m");
                spec.shard_index = std::stoi(args.shard.substr(0, slash));
                spec.shard_count = std::stoi(args.shard.substr(slash + 1));
            }
            if (! args.resume.empty())
                spec.resume_after = read_semiring_file(args.resume);
            if (! args.fixed_add.empty())
                spec.fixed_add = read_semiring_file(args.fixed_add).add_table();

            vector<string> documents;
            optional<Semiring> last;
            auto stats = enumerate(spec, [&] (const Semiring & s) {
                documents.push_back(format_semiring(s));
                last = s;
            });

            string all;
            for (auto & d : documents)
                all += d;
            string checksum = sha256_hex(all);

            if (! args.out_dir.empty()) {
                fs::create_directories(args.out_dir);
                ordered_json manifest;
                manifest["schema"] = "semiring-manifest/1";
                manifest["order"] = spec.order;
                manifest["constraints"] = spec.describe();
                manifest["count"] = documents.size();
                manifest["complete"] = stats.complete;
                manifest["sha256"] = checksum;
                vector<string> names;
                int width = std::max<int>(5, int(std::to_string(documents.size()).size()));
                for (std::size_t i = 0 ; i < documents.size() ; ++i) {
                    std::ostringstream name;
                    name << "sr-" << std::setw(width) << std::setfill('0') << i + 1 << ".sr";
                    names.push_back(name.str());
                    std::ofstream(fs::path(args.out_dir) / name.str(), std::ios::binary) << documents[i];
                }
                manifest["files"] = names;
                std::ofstream(fs::path(args.out_dir) / "manifest.json", std::ios::binary) << manifest.dump(2) << '\n';
                if (last)
                    write_semiring_file(fs::path(args.out_dir) / "checkpoint.sr", *last);
            }
            else if (! config.json())
                for (std::size_t i = 0 ; i < documents.size() ; ++i)
                    out << "# " << i + 1 << '\n' << documents[i];

            if (config.json()) {
                ordered_json doc;
                doc["order"] = spec.order;
                doc["constraints"] = spec.describe();
                doc["count"] = documents.size();
                doc["complete"] = stats.complete;
                doc["sha256"] = checksum;
                out << doc.dump(2) << '\n';
            }
            else {
                out << "order: " << spec.order << '\n';
                out << "constraints: " << spec.describe() << '\n';
                out << "count: " << documents.size() << (stats.complete ? "" : " (stopped at cap)") << '\n';
                out << "sha256: " << checksum << '\n';
            }
            return exit_code::ok;
        }

        // verify-suite --------------------------------------------------------------------------

        auto cmd_verify_suite(const Config & config, const string & dir, const string & theorem_list, std::ostream & out, std::ostream & err) -> int
        {
            auto options = config.options();
            convention_note(config, err);

            vector<string> ids;
            if (theorem_list == "all")
                for (auto & info : theorem_catalog())
                    ids.push_back(info.id);
            else {
                std::istringstream in(theorem_list);
                string item;
                while (std::getline(in, item, ','))
                    if (! item.empty())
                        ids.push_back(find_theorem(item).id);
            }
            if (ids.empty())
                throw Error("--theorems names no theorem");

            vector<fs::path> files;
            for (auto & entry : fs::directory_iterator(dir))
                if (entry.is_regular_file() && entry.path().extension() == ".sr")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());

            auto results = parallel_map<vector<TheoremResult>>(files.size(), config.jobs, [&] (std::size_t i) {
                auto s = read_semiring_file(files[i]);
                vector<TheoremResult> row;
                for (auto & id : ids)
                    row.push_back(verify_theorem(s, id, options));
                return row;
            });

            std::map<string, std::array<int, 3>> counts;
            bool failed = false;
            ordered_json failures = ordered_json::array();
            for (std::size_t i = 0 ; i < files.size() ; ++i)
                for (auto & r : results[i]) {
                    ++counts[r.id][int(r.status)];
                    if (r.status == TheoremStatus::Fail) {
                        failed = true;
                        failures.push_back(ordered_json{ { "file", files[i].filename().string() }, { "theorem", r.id },
                                { "step", r.step }, { "detail", r.detail } });
                    }
                }

            if (config.json()) {
                ordered_json doc;
                doc["schema"] = "semiring-suite/1";
                doc["instances"] = files.size();
                for (auto & id : ids)
                    doc["theorems"][id] = ordered_json{ { "pass", counts[id][0] }, { "fail", counts[id][1] }, { "not-applicable", counts[id][2] } };
                doc["failures"] = failures;
                out << doc.dump(2) << '\n';
            }
            else {
                out << "instances: " << files.size() << '\n';
                for (auto & id : ids)
                    out << id << ": pass " << counts[id][0] << ", fail " << counts[id][1] << ", not-applicable " << counts[id][2] << '\n';
                for (auto & f : failures)
                    out << "FAIL " << f["file"].get<string>() << " " << f["theorem"].get<string>() << " at "
                        << f["step"].get<string>() << ": " << f["detail"].get<string>() << '\n';
            }
            return failed ? exit_code::theorem_violation : exit_code::ok;
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Finite semiring algebra: validation, classification, congruences and decompositions", "srtool" };
        app.require_subcommand(1);
        app.fallthrough();

        Config config;
        app.add_option("--convention", config.convention, "Reading of the LZ/RZ names")
            ->check(CLI::IsMember({ "standard", "table1" }));
        app.add_option("--format", config.format, "Report format")->check(CLI::IsMember({ "text", "json" }));
        app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
        app.add_option("--congruence-cap", config.congruence_cap, "Largest order for congruence lattice enumeration")->check(CLI::PositiveNumber);
        app.add_option("--isomorphism-cap", config.isomorphism_cap, "Largest order for isomorphism search")->check(CLI::PositiveNumber);
        app.add_flag("--malcev-cross-check", config.malcev_cross_check, "Also decide Mal'cev membership by searching all congruences");

        string file;
        auto validate = app.add_subcommand("validate", "Check the semiring axioms");
        validate->add_option("file", file)->required();

        bool classify_all = false;
        vector<string> predicates, theorems;
        auto classify = app.add_subcommand("classify", "Evaluate predicates and theorem checks");
        classify->add_option("file", file)->required();
        classify->add_flag("--all", classify_all, "Every predicate and every theorem check");
        classify->add_option("--predicate", predicates, "Predicate to evaluate (repeatable)");
        classify->add_option("--theorem", theorems, "Theorem to check (repeatable)");

        string reduct = "add";
        auto relations = app.add_subcommand("relations", "Green's relations and quasi-orders");
        relations->add_option("file", file)->required();
        relations->add_option("--reduct", reduct)->check(CLI::IsMember({ "add", "mul" }));

        CongruenceFlags flags;
        auto congruences = app.add_subcommand("congruences", "Named congruences");
        congruences->add_option("file", file)->required();
        congruences->add_flag("--least-dl", flags.least_dl, "Least distributive lattice congruence");
        congruences->add_flag("--sigma", flags.sigma, "The sigma relation");
        congruences->add_flag("--eta", flags.eta, "Transitive closure of sigma");
        congruences->add_flag("--nu", flags.nu, "nu+ on an orthoring");
        congruences->add_flag("--lambda", flags.lambda, "lambda1 and lambda2 on a band orthoring");
        congruences->add_flag("--all", flags.all, "All of the above and the congruence lattice");

        string theorem;
        auto decompose = app.add_subcommand("decompose", "Verify one theorem and print its constructions");
        decompose->add_option("file", file)->required();
        decompose->add_option("--theorem", theorem)->required();

        EnumerateArgs enum_args;
        auto enumerate_cmd = app.add_subcommand("enumerate", "All semirings of one order up to isomorphism");
        enumerate_cmd->add_option("--order", enum_args.order)->required()->check(CLI::PositiveNumber);
        enumerate_cmd->add_flag("--idempotent", enum_args.idempotent, "Idempotent semirings only");
        enumerate_cmd->add_flag("--idempotent-add", enum_args.idempotent_add, "Additively idempotent only");
        enumerate_cmd->add_flag("--idempotent-mul", enum_args.idempotent_mul, "Multiplicatively idempotent only");
        enumerate_cmd->add_flag("--completely-regular", enum_args.completely_regular, "Unions of rings only");
        enumerate_cmd->add_flag("--orthoring", enum_args.orthoring, "Orthorings only");
        enumerate_cmd->add_option("--identity", enum_args.identities, "Extra identity, e.g. 'x + y = y + x' (repeatable)");
        enumerate_cmd->add_option("--fixed-add", enum_args.fixed_add, "Semiring file whose addition table is kept fixed");
        enumerate_cmd->add_option("--cap", enum_args.cap, "Stop after this many instances");
        enumerate_cmd->add_option("--shard", enum_args.shard, "k/m: only shard k of m");
        enumerate_cmd->add_option("--resume", enum_args.resume, "Semiring file; emit only canonical forms after it");
        enumerate_cmd->add_option("--out", enum_args.out_dir, "Directory for one file per instance plus manifest.json");

        string suite_dir, suite_theorems = "all";
        auto suite = app.add_subcommand("verify-suite", "Check theorems on every .sr file of a directory");
        suite->add_option("--dir", suite_dir)->required();
        suite->add_option("--theorems", suite_theorems, "Comma-separated ids or 'all'");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_code::ok : exit_code::usage;
        }

        try {
            if (*validate)
                return cmd_validate(file, out);
            if (*classify)
                return cmd_classify(config, file, classify_all, predicates, theorems, out, err);
            if (*relations)
                return cmd_relations(config, file, reduct, out);
            if (*congruences)
                return cmd_congruences(config, file, flags, out);
            if (*decompose)
                return cmd_decompose(config, file, theorem, out, err);
            if (*enumerate_cmd)
                return cmd_enumerate(config, enum_args, out);
            if (*suite)
                return cmd_verify_suite(config, suite_dir, suite_theorems, out, err);
        }
        catch (const TheoremViolation & e) {
            err << "theorem violation: " << e.what() << '\n';
            return exit_code::theorem_violation;
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }
        return exit_code::usage;
    }
}
