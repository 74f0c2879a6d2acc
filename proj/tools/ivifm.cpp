#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ivif/det.hpp"
#include "ivif/graph.hpp"
#include "ivif/json_io.hpp"
#include "ivif/matrix.hpp"

namespace {

// exit codes: 0 success, 1 usage, 2 constraint or format violation, 3 file I/O
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct IoFailure {
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoFailure{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoFailure{"cannot read " + path};
    return std::move(buf).str();
}

// empty path means stdout
void emit(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw IoFailure{"cannot open " + out_path + " for writing"};
    out << doc << '\n';
    out.flush();
    if (!out)
        throw IoFailure{"cannot write " + out_path};
}

ivif::Matrix load_matrix(const std::string& path) {
    return ivif::read_matrix(slurp(path));
}

using BinaryOp = ivif::Matrix (*)(const ivif::Matrix&, const ivif::Matrix&);
using UnaryOp = ivif::Matrix (*)(const ivif::Matrix&);

BinaryOp binary_op(const std::string& name) {
    if (name == "add")
        return ivif::add;
    if (name == "mul")
        return ivif::mul;
    if (name == "oplus")
        return ivif::oplus;
    if (name == "odot")
        return ivif::odot;
    if (name == "amean")
        return ivif::amean;
    if (name == "gmean")
        return ivif::gmean;
    if (name == "hmean")
        return ivif::hmean;
    return ivif::star;
}

UnaryOp unary_op(const std::string& name) {
    return name == "complement" ? static_cast<UnaryOp>(ivif::complement) : ivif::transpose;
}

ivif::SpecialKind special_kind(const std::string& name) {
    if (name == "a-unit")
        return ivif::SpecialKind::a_unit;
    if (name == "r-unit")
        return ivif::SpecialKind::r_unit;
    if (name == "c-null")
        return ivif::SpecialKind::c_null;
    if (name == "a-null")
        return ivif::SpecialKind::a_null;
    return ivif::SpecialKind::r_null;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval-valued intuitionistic fuzzy matrix tool"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "Check that a matrix document is well formed");
    std::string validate_path;
    validate->add_option("file", validate_path, "matrix JSON file")->required();

    auto* apply = app.add_subcommand("apply", "Combine two matrices elementwise");
    std::string apply_op, apply_a, apply_b, apply_out;
    apply->add_option("--op", apply_op, "operator")
        ->required()
        ->check(CLI::IsMember({"add", "mul", "oplus", "odot", "amean", "gmean", "hmean", "star"}));
    apply->add_option("a", apply_a, "left matrix JSON file")->required();
    apply->add_option("b", apply_b, "right matrix JSON file")->required();
    apply->add_option("-o,--out", apply_out, "output file (default stdout)");

    auto* unary = app.add_subcommand("unary", "Transform a single matrix");
    std::string unary_op_name, unary_a, unary_out;
    unary->add_option("--op", unary_op_name, "operator")
        ->required()
        ->check(CLI::IsMember({"complement", "transpose"}));
    unary->add_option("a", unary_a, "matrix JSON file")->required();
    unary->add_option("-o,--out", unary_out, "output file (default stdout)");

    auto* det = app.add_subcommand("det", "Determinant by permutation expansion");
    std::string det_a;
    det->add_option("a", det_a, "matrix JSON file")->required();

    auto* adj = app.add_subcommand("adj", "Cofactor adjoint");
    std::string adj_a, adj_out;
    adj->add_option("a", adj_a, "matrix JSON file")->required();
    adj->add_option("-o,--out", adj_out, "output file (default stdout)");

    auto* cmp = app.add_subcommand("cmp", "Compare two matrices");
    std::string cmp_relation, cmp_a, cmp_b;
    cmp->add_option("--relation", cmp_relation, "le or eq")
        ->required()
        ->check(CLI::IsMember({"le", "eq"}));
    cmp->add_option("a", cmp_a, "left matrix JSON file")->required();
    cmp->add_option("b", cmp_b, "right matrix JSON file")->required();

    auto* from_graph = app.add_subcommand("from-graph", "Build the matrix of an edge list");
    std::string graph_path, graph_out;
    from_graph->add_option("edges", graph_path, "edge list CSV file")->required();
    from_graph->add_option("-o,--out", graph_out, "output file (default stdout)");

    auto* ident = app.add_subcommand("ident", "Emit a unit or null matrix");
    std::string ident_kind, ident_out;
    std::size_t ident_size = 0;
    ident->add_option("--kind", ident_kind, "matrix family")
        ->required()
        ->check(CLI::IsMember({"a-unit", "r-unit", "c-null", "a-null", "r-null"}));
    ident->add_option("--size", ident_size, "matrix order")
        ->required()
        ->check(CLI::PositiveNumber);
    ident->add_option("-o,--out", ident_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*validate) {
            load_matrix(validate_path);
        } else if (*apply) {
            emit(ivif::write_matrix(
                     binary_op(apply_op)(load_matrix(apply_a), load_matrix(apply_b))),
                 apply_out);
        } else if (*unary) {
            emit(ivif::write_matrix(unary_op(unary_op_name)(load_matrix(unary_a))), unary_out);
        } else if (*det) {
            std::cout << ivif::write_value(ivif::determinant(load_matrix(det_a))) << '\n';
        } else if (*adj) {
            emit(ivif::write_matrix(ivif::adjoint(load_matrix(adj_a))), adj_out);
        } else if (*cmp) {
            const ivif::Matrix a = load_matrix(cmp_a);
            const ivif::Matrix b = load_matrix(cmp_b);
            bool result = false;
            if (cmp_relation == "le") {
                result = ivif::le(a, b);
                if (!result && !ivif::le(b, a))
                    std::cerr << "note: the matrices are incomparable\n";
            } else {
                result = ivif::eq(a, b);
            }
            std::cout << (result ? "true" : "false") << '\n';
        } else if (*from_graph) {
            emit(ivif::write_matrix(ivif::build_matrix(ivif::parse_graph(slurp(graph_path)))),
                 graph_out);
        } else if (*ident) {
            emit(ivif::write_matrix(ivif::make_special(special_kind(ident_kind), ident_size)),
                 ident_out);
        }
        return 0;
    } catch (const IoFailure& f) {
        std::cerr << "error: " << f.message << '\n';
        return kExitIo;
    } catch (const ivif::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
