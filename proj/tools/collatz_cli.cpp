#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collatz/census.hpp"
#include "collatz/codec.hpp"
#include "collatz/gridgraph.hpp"
#include "collatz/similarity.hpp"
#include "collatz/svg.hpp"
#include "collatz/walk.hpp"

namespace {

collatz::BigInt parse_n(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw collatz::DomainError("'" + text + "' is not a decimal integer");
    }
    return collatz::BigInt(text);
}

collatz::Walk walk_for(const collatz::BigInt& n, collatz::Rule rule, std::uint64_t step_cap) {
    const collatz::Encoding enc = collatz::encode(n, step_cap);
    switch (rule) {
        case collatz::Rule::Collatz: return collatz::collatz_walk(enc.bits);
        case collatz::Rule::Reverse: return collatz::reverse_walk(enc.bits);
        case collatz::Rule::OnChangeTurnRight: return collatz::on_change_walk(enc.bits);
        case collatz::Rule::Dragon: break;
    }
    throw collatz::DomainError("curves of n use the collatz, reverse or on-change rule");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw collatz::IoError("cannot open " + path + " for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw collatz::IoError("write failed for " + path);
    }
}

void print_matrix(const collatz::SimilarityMatrix& m, std::ostream& out) {
    std::size_t width = 0;
    for (std::uint64_t n : m.ns) {
        width = std::max(width, std::to_string(n).size());
    }
    for (const auto& row : m.lcs) {
        for (std::size_t v : row) {
            width = std::max(width, std::to_string(v).size());
        }
    }
    auto cell = [width](const std::string& text) {
        return std::string(width - text.size(), ' ') + text;
    };

    out << std::string(width, ' ');
    for (std::uint64_t n : m.ns) {
        out << "  " << cell(std::to_string(n));
    }
    out << '\n';
    for (std::size_t i = 0; i < m.ns.size(); ++i) {
        out << cell(std::to_string(m.ns[i]));
        for (std::size_t v : m.lcs[i]) {
            out << "  " << cell(std::to_string(v));
        }
        out << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collatz trajectory encodings, lattice curves, and curve census"};
    app.require_subcommand(1);

    std::uint64_t step_cap = collatz::kDefaultStepCap;
    app.add_option("--step-cap", step_cap, "Iteration step cap")
        ->capture_default_str();

    // encode
    std::string encode_n;
    auto* cmd_encode = app.add_subcommand("encode", "Print the binary encoding and decimal value of n");
    cmd_encode->add_option("n", encode_n, "Integer >= 2")->required();

    // decode
    std::string decode_bits;
    auto* cmd_decode = app.add_subcommand("decode", "Recover n from its binary encoding");
    cmd_decode->add_option("bits", decode_bits, "Encoding bit string")->required();

    // stopping-time
    std::string sigma_n;
    auto* cmd_sigma = app.add_subcommand("stopping-time", "Print the total stopping time of n");
    cmd_sigma->add_option("n", sigma_n, "Integer >= 1")->required();

    // curve
    std::string curve_n, curve_rule = "collatz", curve_out;
    collatz::RenderOptions curve_opts;
    auto* cmd_curve = app.add_subcommand("curve", "Render the lattice curve of n as SVG");
    cmd_curve->add_option("n", curve_n, "Integer >= 2")->required();
    cmd_curve->add_option("--rule", curve_rule, "collatz, reverse or on-change")
        ->capture_default_str();
    cmd_curve->add_option("--out", curve_out, "Output SVG path")->required();
    cmd_curve->add_option("--scale", curve_opts.scale, "Pixels per lattice unit")
        ->capture_default_str();
    cmd_curve->add_option("--margin", curve_opts.margin, "Margin in pixels")
        ->capture_default_str();
    cmd_curve->add_option("--stroke-width", curve_opts.stroke_width, "Stroke width")
        ->capture_default_str();
    cmd_curve->add_flag("--mark-start", curve_opts.mark_start, "Dot at the start point");

    // dragon
    int dragon_order = 0;
    std::string dragon_out;
    collatz::RenderOptions dragon_opts;
    auto* cmd_dragon = app.add_subcommand("dragon", "Render the dragon curve of a given order as SVG");
    cmd_dragon->add_option("order", dragon_order, "Order >= 1")->required();
    cmd_dragon->add_option("--out", dragon_out, "Output SVG path")->required();
    cmd_dragon->add_option("--scale", dragon_opts.scale, "Pixels per lattice unit")
        ->capture_default_str();
    cmd_dragon->add_option("--margin", dragon_opts.margin, "Margin in pixels")
        ->capture_default_str();
    cmd_dragon->add_option("--stroke-width", dragon_opts.stroke_width, "Stroke width")
        ->capture_default_str();

    // girth
    std::string girth_n, girth_rule = "collatz";
    auto* cmd_girth = app.add_subcommand("girth", "Print the girth of n's curve graph, or 'inf'");
    cmd_girth->add_option("n", girth_n, "Integer >= 2")->required();
    cmd_girth->add_option("--rule", girth_rule, "collatz, reverse or on-change")
        ->capture_default_str();

    // census
    collatz::CensusConfig census_cfg;
    census_cfg.range_end = 1'000'000;
    std::string census_rule = "reverse", census_out;
    auto* cmd_census = app.add_subcommand("census", "Classify every curve in a range by girth");
    cmd_census->add_option("--from", census_cfg.range_start, "First n")->capture_default_str();
    cmd_census->add_option("--to", census_cfg.range_end, "Last n")->capture_default_str();
    cmd_census->add_option("--rule", census_rule, "collatz, reverse or on-change")
        ->capture_default_str();
    cmd_census->add_option("--workers", census_cfg.worker_count, "Worker threads (0 = all cores)")
        ->capture_default_str();
    cmd_census->add_option("--chunk-size", census_cfg.chunk_size, "Range chunk per work unit")
        ->capture_default_str();
    cmd_census->add_option("--out", census_out, "Report file path")->required();
    cmd_census->add_option("--checkpoint", census_cfg.checkpoint_path,
                           "Checkpoint file; an interrupted sweep resumes from it");

    // similar
    std::vector<std::uint64_t> similar_ns;
    auto* cmd_similar = app.add_subcommand(
        "similar", "Pairwise longest-common-substring matrix of encodings");
    cmd_similar->add_option("ns", similar_ns, "Integers >= 2")->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*cmd_encode) {
            const collatz::Encoding enc = collatz::encode(parse_n(encode_n), step_cap);
            std::cout << enc.bits << ' ' << enc.value << '\n';
        } else if (*cmd_decode) {
            std::cout << collatz::decode(decode_bits) << '\n';
        } else if (*cmd_sigma) {
            std::cout << collatz::stopping_time(parse_n(sigma_n), step_cap) << '\n';
        } else if (*cmd_curve) {
            const auto walk = walk_for(parse_n(curve_n), collatz::rule_from_name(curve_rule),
                                       step_cap);
            write_text_file(curve_out, collatz::render_svg(walk, curve_opts));
        } else if (*cmd_dragon) {
            write_text_file(dragon_out,
                            collatz::render_svg(collatz::dragon_walk(dragon_order), dragon_opts));
        } else if (*cmd_girth) {
            const auto walk = walk_for(parse_n(girth_n), collatz::rule_from_name(girth_rule),
                                       step_cap);
            const auto g = collatz::girth(collatz::graph_of(walk));
            if (g) {
                std::cout << *g << '\n';
            } else {
                std::cout << "inf\n";
            }
        } else if (*cmd_census) {
            census_cfg.rule = collatz::rule_from_name(census_rule);
            census_cfg.step_cap = step_cap;
            const collatz::CensusReport report = collatz::run_census(census_cfg);
            collatz::write_report_file(report, census_out);
            std::cout << "acyclic=" << report.count_acyclic()
                      << " girth4=" << report.count_girth4
                      << " exotic=" << report.count_exotic()
                      << " cap-exceeded=" << report.count_cap_exceeded()
                      << " completed_through=" << report.completed_through << '\n'
                      << "report written to " << census_out << '\n';
            std::cerr << "elapsed: " << report.elapsed.count() << " ms\n";
        } else if (*cmd_similar) {
            print_matrix(collatz::similarity_matrix(similar_ns, step_cap), std::cout);
        }
    } catch (const collatz::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
