#include "strictclose/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "strictclose/io.hpp"
#include "strictclose/strict_closure.hpp"
#include "strictclose/weakly_arf.hpp"

namespace strictclose {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DegreeBox box_for(const MonomialAlgebra& r, const std::string& box_spec) {
    if (box_spec.empty()) return default_box(r);
    ExponentVec bound;
    std::string tok;
    std::istringstream in(box_spec);
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            bound.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed --box entry '" + tok + "'");
        }
    }
    if (bound.size() != r.dim())
        throw std::runtime_error("--box must list one bound per ambient variable");
    return DegreeBox(std::move(bound));
}

void print_rows(std::ostream& out, const std::vector<ExponentVec>& rows) {
    for (const auto& v : rows) out << vec_row(v) << "\n";
}

void print_complete(std::ostream& out, bool complete) {
    out << "complete: " << (complete ? "yes" : "no") << "\n";
}

int cmd_normalize(std::ostream& out, const std::string& file, const std::string& box_spec) {
    auto r = parse_algebra(read_file(file));
    auto n = normalization_generators(r.semigroup, box_for(r, box_spec));
    print_rows(out, n.generators);
    print_complete(out, n.complete);
    return n.complete ? 0 : 2;
}

bool valid_extension(const MonomialAlgebra& r, const MonomialAlgebra& t) {
    for (const auto& g : r.gens())
        if (!contains(t.semigroup, g)) return false;
    if (r.gens().empty() || t.gens().empty()) return r.gens().empty() == t.gens().empty();
    return group_lattice(r.semigroup) == group_lattice(t.semigroup);
}

int cmd_closure(std::ostream& out, const std::string& file, const std::string& in_file,
                const std::string& box_spec) {
    auto r = parse_algebra(read_file(file));
    auto box = box_for(r, box_spec);
    bool complete = true;
    std::optional<MonomialAlgebra> t;
    if (!in_file.empty()) {
        t = parse_algebra(read_file(in_file));
    } else {
        auto n = normalization_generators(r.semigroup, box);
        complete = n.complete;
        t = MonomialAlgebra(AffineSemigroup(r.dim(), n.generators));
        if (!complete && !valid_extension(r, *t)) {
            // The truncated normalization is not even an extension of R;
            // nothing meaningful to sweep.
            out << "indeterminate\n";
            print_complete(out, false);
            return 2;
        }
    }
    auto report = strict_closure(r, *t, box);
    complete = complete && report.complete;
    print_rows(out, report.closure.gens());
    print_complete(out, complete);
    return complete ? 0 : 2;
}

int cmd_check_closed(std::ostream& out, const std::string& file, const std::string& box_spec) {
    auto r = parse_algebra(read_file(file));
    auto box = box_for(r, box_spec);
    switch (is_strictly_closed(r, box)) {
        case Verdict::holds:
            out << "strictly closed\n";
            print_complete(out, true);
            return 0;
        case Verdict::fails: {
            auto n = normalization_generators(r.semigroup, box);
            MonomialAlgebra t{AffineSemigroup(r.dim(), n.generators)};
            auto report = strict_closure(r, t, box);
            out << "not strictly closed\n";
            out << "witness: " << vec_tuple(report.new_degrees.front()) << "\n";
            print_complete(out, true);
            return 1;
        }
        case Verdict::indeterminate:
        default:
            out << "indeterminate\n";
            print_complete(out, false);
            return 2;
    }
}

int cmd_check_weak_arf(std::ostream& out, const std::string& file, const std::string& box_spec) {
    auto r = parse_algebra(read_file(file));
    if (r.dim() == 1) {
        auto res = numerical_weak_arf(r.semigroup);
        if (res.weakly_arf) {
            out << "weakly arf\n";
            return 0;
        }
        const auto& w = *res.witness;
        out << "witness: (" << w[0] << ") (" << w[1] << ") (" << w[2] << ")\n";
        return 1;
    }
    auto witness = monomial_weak_arf(r, box_for(r, box_spec));
    if (witness) {
        out << "witness: " << vec_tuple(witness->a) << " " << vec_tuple(witness->b) << " "
            << vec_tuple(witness->c) << "\n";
        return 1;
    }
    out << "no witness in box\n";
    out << "note: not a weak-Arf certificate for ambient dimension > 1\n";
    return 0;
}

int cmd_check_criterion(std::ostream& out, const std::string& file, const std::string& adjoin) {
    auto r = parse_algebra(read_file(file));
    auto v = parse_vector_list(read_file(adjoin));
    if (v.ambient_dim != r.dim())
        throw std::runtime_error("--adjoin file has a different ambient dimension");
    auto violation = pairwise_product_violation(r, v.rows);
    if (!violation) {
        out << "criterion holds\n";
        return 0;
    }
    out << "criterion fails: " << vec_tuple(violation->first) << " "
        << vec_tuple(violation->second) << "\n";
    return 1;
}

int cmd_conductor(std::ostream& out, const std::string& file, const std::string& box_spec) {
    auto r = parse_algebra(read_file(file));
    auto res = conductor_criterion(r, box_for(r, box_spec));
    switch (res.verdict) {
        case Verdict::holds:
            out << "conductor criterion holds\n";
            return 0;
        case Verdict::fails:
            out << "conductor criterion fails: " << vec_tuple(res.failure->first) << " "
                << vec_tuple(res.failure->second) << "\n";
            return 1;
        case Verdict::indeterminate:
        default:
            out << "indeterminate\n";
            print_complete(out, false);
            return 2;
    }
}

int cmd_sr_check(std::ostream& out, const std::string& file) {
    auto cx = parse_complex(read_file(file));
    if (sr_is_strictly_closed(cx)) {
        out << "strictly closed\n";
        return 0;
    }
    out << "not strictly closed\n";
    return 1;
}

int cmd_rees(std::ostream& out, const std::string& file) {
    auto ideal = parse_vector_list(read_file(file));
    for (const auto& row : ideal.rows)
        if (is_zero(row)) throw std::runtime_error("rees: the unit ideal has a zero exponent row");
    out << print_algebra(rees_algebra(ideal.ambient_dim, ideal.rows));
    return 0;
}

int cmd_build(std::ostream& out, const std::string& file, const std::string& adjoin) {
    auto a = parse_algebra(read_file(file));
    auto v = parse_vector_list(read_file(adjoin));
    if (v.ambient_dim != a.dim())
        throw std::runtime_error("--adjoin file has a different ambient dimension");
    out << print_algebra(build_cor23b(a, v.rows));
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact strict-closure, normalization and weak-Arf toolkit for monomial algebras"};
    app.require_subcommand(1);

    std::string file, second, box_spec;

    auto add_box = [&](CLI::App* cmd) {
        cmd->add_option("--box", box_spec,
                        "Comma-separated sweep bound per variable (default: twice the "
                        "componentwise max of normalization plus input generators)");
    };

    auto* normalize = app.add_subcommand("normalize", "Generators of the integral closure");
    normalize->add_option("file", file, "algebra file")->required();
    add_box(normalize);

    auto* closure = app.add_subcommand("closure", "Minimal generators of the strict closure");
    closure->add_option("file", file, "algebra file")->required();
    closure->add_option("--in", second, "algebra file for an explicit extension T");
    add_box(closure);

    auto* check_closed = app.add_subcommand("check-closed", "Is R strictly closed?");
    check_closed->add_option("file", file, "algebra file")->required();
    add_box(check_closed);

    auto* check_wa = app.add_subcommand("check-weak-arf", "Search for a weak-Arf violation");
    check_wa->add_option("file", file, "algebra file")->required();
    add_box(check_wa);

    auto* check_crit = app.add_subcommand("check-criterion", "Pairwise-product criterion for V");
    check_crit->add_option("file", file, "algebra file")->required();
    check_crit->add_option("--adjoin", second, "file listing V")->required();

    auto* conductor = app.add_subcommand("conductor", "Maximal-ideal criterion for weak Arf");
    conductor->add_option("file", file, "algebra file")->required();
    add_box(conductor);

    auto* sr = app.add_subcommand("sr-check", "Strict closedness of a face ring");
    sr->add_option("file", file, "complex file")->required();

    auto* rees = app.add_subcommand("rees", "Rees algebra of a monomial ideal");
    rees->add_option("file", file, "file listing ideal generators")->required();

    auto* build = app.add_subcommand("build", "Pairwise-products-and-cubes algebra over A");
    build->add_option("file", file, "algebra file for A")->required();
    build->add_option("--adjoin", second, "file listing V")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (normalize->parsed()) return cmd_normalize(out, file, box_spec);
        if (closure->parsed()) return cmd_closure(out, file, second, box_spec);
        if (check_closed->parsed()) return cmd_check_closed(out, file, box_spec);
        if (check_wa->parsed()) return cmd_check_weak_arf(out, file, box_spec);
        if (check_crit->parsed()) return cmd_check_criterion(out, file, second);
        if (conductor->parsed()) return cmd_conductor(out, file, box_spec);
        if (sr->parsed()) return cmd_sr_check(out, file);
        if (rees->parsed()) return cmd_rees(out, file);
        if (build->parsed()) return cmd_build(out, file, second);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no command\n";
    return 3;
}

}  // namespace strictclose
