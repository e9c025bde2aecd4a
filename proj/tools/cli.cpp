#include "cli.hpp"

#include "ordkit/axioms.hpp"
#include "ordkit/derived.hpp"
#include "ordkit/enumerate.hpp"
#include "ordkit/gallery.hpp"
#include "ordkit/lazy_seq.hpp"
#include "ordkit/products.hpp"
#include "ordkit/relation_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ordkit::cli {

using nlohmann::ordered_json;

namespace {

    class IllDefined : public OrdError
    {
    public:
        using OrdError::OrdError;
    };

    enum class Format
    {
        Text,
        Json,
    };

    std::string labels_of(const Setoid &s, const std::vector<Index> &w)
    {
        std::string out = "(";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out += ", ";
            out += s.label(w[i]);
        }
        return out + ")";
    }

    ordered_json witness_json(const Setoid &s, const std::vector<Index> &w)
    {
        auto j = ordered_json::array();
        for (Index i : w)
            j.push_back(s.label(i));
        return j;
    }

    std::string verdict_text(const Setoid &s, const Verdict &v)
    {
        return v.holds ? "yes" : "no, witness " + labels_of(s, v.witness);
    }

    ordered_json verdict_json(const Setoid &s, const Verdict &v)
    {
        ordered_json j;
        j["holds"] = v.holds;
        j["witness"] = v.holds ? ordered_json(nullptr) : witness_json(s, v.witness);
        return j;
    }

    void print_matrix(std::ostream &os, const Setoid &s, const BoolMatrix &m)
    {
        std::size_t width = 1;
        for (const auto &l : s.labels())
            width = std::max(width, l.size());
        os << "  " << std::setw(int(width)) << "";
        for (const auto &l : s.labels())
            os << ' ' << std::setw(int(width)) << l;
        os << '\n';
        for (Index i = 0; i < s.size(); ++i) {
            os << "  " << std::setw(int(width)) << s.label(i);
            for (Index j = 0; j < s.size(); ++j)
                os << ' ' << std::setw(int(width)) << (m(i, j) ? "1" : ".");
            os << '\n';
        }
    }

    ordered_json matrix_json(const BoolMatrix &m)
    {
        auto rows = ordered_json::array();
        for (Index i = 0; i < m.size(); ++i) {
            std::string row;
            for (Index j = 0; j < m.size(); ++j)
                row.push_back(m(i, j) ? '1' : '0');
            rows.push_back(row);
        }
        return rows;
    }

    void require_well_defined(const Setoid &base, const BoolMatrix &rel, const std::string &what)
    {
        auto v = check_well_defined(base, rel);
        if (!v)
            throw IllDefined(what + ": relation is not well defined, witness (x, x', y, y') = " +
                             labels_of(base, v.witness));
    }

    StrictRel load_strict(const std::string &path)
    {
        auto doc = read_relation_file(path);
        if (doc.kind != RelationKind::Less)
            throw ParseError(path + ": expected a strict relation ('less'), found 'sim'");
        require_well_defined(doc.base, doc.rel, path);
        return doc.as_strict();
    }

    const char *const kAxiomNames[] = {"asymmetric",       "transitive",       "cotransitive",
                                       "neg_antisymmetric", "pos_antisymmetric", "discrete"};
    const char *const kAxiomText[] = {"asymmetric",
                                      "transitive",
                                      "cotransitive",
                                      "negatively antisymmetric",
                                      "positively antisymmetric",
                                      "discrete"};

    std::array<const Verdict *, 6> verdicts(const AxiomProfile &p)
    {
        return {&p.asymmetric, &p.transitive, &p.cotransitive, &p.neg_antisymmetric, &p.pos_antisymmetric, &p.discrete};
    }

    void profile_text(std::ostream &os, const StrictRel &r, const AxiomProfile &p)
    {
        auto vs = verdicts(p);
        for (std::size_t i = 0; i < vs.size(); ++i)
            os << kAxiomText[i] << ": " << verdict_text(r.base(), *vs[i]) << '\n';
        os << "generalized ordered: " << (p.is_generalized_ordered() ? "yes" : "no")
           << "; ordered set: " << (p.is_ordered_set() ? "yes" : "no") << '\n';
    }

    ordered_json profile_json(const StrictRel &r, const AxiomProfile &p)
    {
        ordered_json j;
        auto vs = verdicts(p);
        for (std::size_t i = 0; i < vs.size(); ++i)
            j[kAxiomNames[i]] = verdict_json(r.base(), *vs[i]);
        j["generalized_ordered"] = p.is_generalized_ordered();
        j["ordered_set"] = p.is_ordered_set();
        return j;
    }

    std::string strict_report(const StrictRel &r, Format format)
    {
        const auto p = classify(r);
        const auto leq_n = derive_leq_n(r);
        const auto leq_p = derive_leq_p(r);
        if (format == Format::Json) {
            ordered_json j;
            j["kind"] = "less";
            j["elements"] = r.base().labels();
            j["profile"] = profile_json(r, p);
            j["leq_n"] = matrix_json(leq_n);
            j["leq_p"] = matrix_json(leq_p);
            return j.dump(2) + "\n";
        }
        std::ostringstream os;
        os << "elements: " << r.size() << ", equality classes: " << r.base().class_count() << '\n';
        profile_text(os, r, p);
        os << "leq_N:\n";
        print_matrix(os, r.base(), leq_n);
        os << "leq_P:\n";
        print_matrix(os, r.base(), leq_p);
        return os.str();
    }

    std::string poset_report(const PosetRel &poset, Format format)
    {
        const auto pp = check_poset(poset);
        const auto total = check_total(poset);
        const auto decidable = check_decidable_eq(poset.base());
        const auto star = check_star_condition(poset);
        const auto strict = poset_to_strict(poset);
        const auto sp = classify(strict);
        const Setoid &s = poset.base();

        if (format == Format::Json) {
            ordered_json j;
            j["kind"] = "sim";
            j["elements"] = s.labels();
            j["reflexive"] = verdict_json(s, pp.reflexive);
            j["transitive"] = verdict_json(s, pp.transitive);
            j["antisymmetric"] = verdict_json(s, pp.antisymmetric);
            j["partially_ordered"] = pp.is_poset();
            j["total"] = verdict_json(s, total);
            j["decidable_equality"] = verdict_json(s, decidable);
            j["star_condition"] = verdict_json(s, star);
            j["bridge"] = relation_to_json(strict);
            j["bridge_profile"] = profile_json(strict, sp);
            return j.dump(2) + "\n";
        }
        std::ostringstream os;
        os << "elements: " << s.size() << ", equality classes: " << s.class_count() << '\n';
        os << "reflexive: " << verdict_text(s, pp.reflexive) << '\n';
        os << "transitive: " << verdict_text(s, pp.transitive) << '\n';
        os << "antisymmetric: " << verdict_text(s, pp.antisymmetric) << '\n';
        os << "partially ordered: " << (pp.is_poset() ? "yes" : "no") << '\n';
        os << "total: " << verdict_text(s, total) << '\n';
        os << "decidable equality: " << verdict_text(s, decidable) << '\n';
        os << "star condition: " << verdict_text(s, star) << '\n';
        os << "bridge relation x<y := x~y and not x=y:\n";
        print_matrix(os, s, strict.matrix());
        profile_text(os, strict, sp);
        return os.str();
    }

    ordered_json summary_json(const EnumerationSummary &s)
    {
        ordered_json j;
        j["carrier_size"] = s.carrier_size;
        j["equality_mode"] = to_string(s.equality_mode);
        j["setoid_count"] = s.setoid_count;
        j["total_relations"] = s.total_relations;
        j["well_defined_count"] = s.well_defined_count;
        j["generalized_ordered_count"] = s.generalized_ordered_count;
        j["ordered_set_count"] = s.ordered_set_count;
        j["poset_count"] = s.poset_count;
        ordered_json profiles = ordered_json::object();
        for (const auto &[k, v] : s.counts_by_axiom_profile)
            profiles[k] = v;
        j["counts_by_axiom_profile"] = profiles;
        auto tallies = ordered_json::array();
        for (const auto &t : s.tallies)
            tallies.push_back({{"name", t.name}, {"checked", t.checked}, {"violations", t.violations}});
        j["theorem_tallies"] = tallies;
        auto violations = ordered_json::array();
        for (const auto &v : s.theorem_violations)
            violations.push_back({{"theorem", v.theorem}, {"instance", v.instance}});
        j["theorem_violations"] = violations;
        auto inventory = ordered_json::array();
        for (const auto &e : s.counterexample_inventory) {
            ordered_json entry;
            entry["name"] = e.name;
            entry["count"] = e.count;
            entry["searched"] = e.searched;
            auto example = ordered_json::array();
            for (const auto &r : e.example)
                example.push_back(relation_to_json(r));
            entry["example"] = example;
            inventory.push_back(entry);
        }
        j["counterexample_inventory"] = inventory;
        return j;
    }

    std::string summary_text(const EnumerationSummary &s)
    {
        std::ostringstream os;
        os << "carrier size " << s.carrier_size << ", equality " << to_string(s.equality_mode) << " ("
           << s.setoid_count << (s.setoid_count == 1 ? " setoid" : " setoids") << ")\n";
        os << "relations: " << s.total_relations << " total, " << s.well_defined_count << " well defined, "
           << s.poset_count << " posets\n";
        os << s.generalized_ordered_count << " generalized ordered, " << s.ordered_set_count << " ordered, "
           << s.theorem_violations.size() << " violations\n";
        os << "\naxiom profiles (ATCNPD):\n";
        for (const auto &[k, v] : s.counts_by_axiom_profile)
            os << "  " << k << "  " << v << '\n';
        os << "\ntheorem battery:\n";
        for (const auto &t : s.tallies)
            os << "  " << std::left << std::setw(42) << t.name << std::right << std::setw(8) << t.checked
               << " checked  " << t.violations << " violations\n";
        for (const auto &v : s.theorem_violations)
            os << "  VIOLATION " << v.theorem << ": " << v.instance << '\n';
        os << "\ninventory:\n";
        for (const auto &e : s.counterexample_inventory) {
            os << "  " << e.name << ": " << e.count << " of " << e.searched;
            for (std::size_t k = 0; k < e.example.size(); ++k)
                os << (k ? "; " : "  first: ") << describe(e.example[k]);
            os << '\n';
        }
        return os.str();
    }

    ordered_json gallery_json(const GalleryReport &r)
    {
        ordered_json j;
        j["name"] = r.name;
        j["oracle"] = r.oracle ? ordered_json(*r.oracle) : ordered_json(nullptr);
        j["revealed"] = r.revealed;
        j["detail"] = r.detail;
        j["consistent"] = r.consistent;
        j["passed"] = r.passed();
        auto checks = ordered_json::array();
        for (const auto &c : r.checks)
            checks.push_back({{"name", c.name}, {"holds", c.holds}});
        j["checks"] = checks;
        auto instances = ordered_json::array();
        for (const auto &inst : r.instances)
            instances.push_back({{"name", inst.name},
                                 {"relation", std::visit([](const auto &rel) { return relation_to_json(rel); },
                                                         inst.relation)}});
        j["instances"] = instances;
        return j;
    }

    std::string gallery_text(const GalleryReport &r)
    {
        std::ostringstream os;
        os << r.name;
        if (r.oracle)
            os << " [P=" << (*r.oracle ? "true" : "false") << "]";
        os << ": " << (r.passed() ? "pass" : "FAIL");
        if (!r.revealed.empty())
            os << ", revealed " << r.revealed << ", " << (r.consistent ? "consistent" : "INCONSISTENT");
        os << " (" << r.detail << ")\n";
        for (const auto &c : r.checks)
            os << "  [" << (c.holds ? "ok" : "!!") << "] " << c.name << '\n';
        return os.str();
    }

    std::string seq_label(const EvConstSeq &s)
    {
        const Setoid &b = s.base->base();
        std::string out = "[";
        for (std::size_t i = 0; i < s.prefix.size(); ++i)
            out += (i ? "," : "") + b.label(s.prefix[i]);
        return out + "] then " + b.label(s.tail) + " forever";
    }

    void write_file(const std::string &path, const std::string &text)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << text))
            throw OrdError("cannot write '" + path + "'");
    }

    std::string read_text(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ParseError("cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"ordkit: axiom checks, derived orders, products and exhaustive theorem batteries for finite "
                 "strict relations"};
    app.name("ordkit");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::string output_path;
    app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", output_path, "Write the result to this file instead of stdout");

    std::string path, path_b, kind, order, equality = "identity", report_path, gallery_name;
    std::size_t size = 0;

    auto *check = app.add_subcommand("check", "Classify a relation file");
    check->add_option("file", path)->required();

    auto *derive_cmd = app.add_subcommand("derive", "Print the derived weak orders");
    derive_cmd->add_option("file", path)->required();
    derive_cmd->add_option("--order", order, "np (leq_N) or pp (leq_P); both when omitted")
        ->check(CLI::IsMember({"np", "pp"}));

    auto *product = app.add_subcommand("product", "Emit a product structure as a relation file");
    product->add_option("left", path)->required();
    product->add_option("right", path_b)->required();
    product->add_option("--kind", kind)->required()->check(
        CLI::IsMember({"lex", "weaklex", "coarse-left", "coarse-right"}));

    auto *dual_cmd = app.add_subcommand("dual", "Emit the dual relation file");
    dual_cmd->add_option("file", path)->required();

    auto *enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive theorem battery over small carriers");
    enumerate_cmd->add_option("--size", size)->required();
    enumerate_cmd->add_option("--equality", equality)->check(CLI::IsMember({"identity", "all-partitions"}));
    enumerate_cmd->add_option("--report", report_path, "Also write the machine-readable summary here");

    auto *gallery = app.add_subcommand("gallery", "Run the constructive-counterexample gallery");
    gallery->add_option("name", gallery_name);

    auto *seq = app.add_subcommand("seq-compare", "Compare two eventually-constant sequences");
    seq->add_option("file", path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Text;
    std::string result;
    int status = kOk;

    try {
        if (check->parsed()) {
            auto doc = read_relation_file(path);
            require_well_defined(doc.base, doc.rel, path);
            result = doc.kind == RelationKind::Less ? strict_report(doc.as_strict(), format)
                                                    : poset_report(doc.as_poset(), format);
        } else if (derive_cmd->parsed()) {
            auto r = load_strict(path);
            if (format == Format::Json) {
                ordered_json j;
                j["elements"] = r.base().labels();
                if (order != "pp")
                    j["leq_n"] = matrix_json(derive_leq_n(r));
                if (order != "np")
                    j["leq_p"] = matrix_json(derive_leq_p(r));
                result = j.dump(2) + "\n";
            } else {
                std::ostringstream os;
                if (order != "pp") {
                    os << "leq_N:\n";
                    print_matrix(os, r.base(), derive_leq_n(r));
                }
                if (order != "np") {
                    os << "leq_P:\n";
                    print_matrix(os, r.base(), derive_leq_p(r));
                }
                result = os.str();
            }
        } else if (product->parsed()) {
            auto a = load_strict(path);
            auto b = load_strict(path_b);
            StrictRel p;
            if (kind == "lex")
                p = lex_product(a, b);
            else if (kind == "weaklex")
                p = weak_lex_product(a, b);
            else
                p = coarse_product(a, b, kind == "coarse-left" ? CoarseSide::Left : CoarseSide::Right);
            result = emit_relation(p);
        } else if (dual_cmd->parsed()) {
            result = emit_relation(dual(load_strict(path)));
        } else if (enumerate_cmd->parsed()) {
            auto summary = enumerate(size, parse_equality_mode(equality));
            auto machine = summary_json(summary).dump(2) + "\n";
            result = format == Format::Json ? machine : summary_text(summary);
            if (!summary.theorem_violations.empty()) {
                err << result;
                return kParseError;
            }
            if (!report_path.empty())
                write_file(report_path, machine);
        } else if (gallery->parsed()) {
            std::vector<GalleryReport> reports;
            if (gallery_name.empty()) {
                reports = run_all_galleries();
            } else {
                try {
                    reports = run_gallery(gallery_name);
                } catch (const OrdError &e) {
                    err << e.what() << "; valid names:";
                    for (auto n : gallery_names())
                        err << ' ' << n;
                    err << '\n';
                    return kParseError;
                }
            }
            bool all_passed = true;
            if (format == Format::Json) {
                auto arr = ordered_json::array();
                for (const auto &r : reports) {
                    arr.push_back(gallery_json(r));
                    all_passed = all_passed && r.passed();
                }
                result = arr.dump(2) + "\n";
            } else {
                for (const auto &r : reports) {
                    result += gallery_text(r);
                    all_passed = all_passed && r.passed();
                }
            }
            if (!all_passed) {
                err << result;
                return kParseError;
            }
        } else if (seq->parsed()) {
            auto input = parse_seq_compare(read_text(path), std::filesystem::path(path).parent_path());
            require_well_defined(input.base->base(), input.base->matrix(), path);
            auto f = seq_normalize(input.f);
            auto g = seq_normalize(input.g);
            auto v = seq_compare(f, g);
            if (format == Format::Json) {
                ordered_json j;
                j["outcome"] = to_string(v.outcome);
                j["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
                result = j.dump(2) + "\n";
            } else {
                result = "f = " + seq_label(f) + "\ng = " + seq_label(g) + "\n" + to_string(v.outcome);
                if (v.witness)
                    result += " at position " + std::to_string(*v.witness);
                result += "\n";
            }
        }
    } catch (const IllDefined &e) {
        err << e.what() << '\n';
        return kIllDefined;
    } catch (const ParseError &e) {
        err << e.what() << '\n';
        return kParseError;
    } catch (const OrdError &e) {
        err << e.what() << '\n';
        return kParseError;
    }

    try {
        if (output_path.empty())
            out << result;
        else
            write_file(output_path, result);
    } catch (const OrdError &e) {
        err << e.what() << '\n';
        return kParseError;
    }
    return status;
}

} // namespace ordkit::cli
