// qcetd command line: field inspection, array transforms, QC encoders,
// parity verification, generator construction from parity checks, random
// instance generation, and operation-count benchmarking.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcetd/bench.hpp"
#include "qcetd/codec.hpp"
#include "qcetd/galois.hpp"
#include "qcetd/io.hpp"
#include "qcetd/qcldpc.hpp"
#include "qcetd/random.hpp"
#include "qcetd/transform.hpp"

using json = nlohmann::ordered_json;
using namespace qcetd;

namespace {

// --poly flag wins over QC_DEFAULT_POLY_<r>, which wins over the built-in
// default
unsigned resolve_poly(int r, const std::string& flag_poly) {
    if (!flag_poly.empty()) return static_cast<unsigned>(std::stoul(flag_poly, nullptr, 16));
    std::string var = "QC_DEFAULT_POLY_" + std::to_string(r);
    if (const char* env = std::getenv(var.c_str()))
        return static_cast<unsigned>(std::stoul(env, nullptr, 16));
    return Field::default_poly(r);
}

int r_for_e(long e) {
    for (int r = 1; r <= 16; ++r)
        if ((1L << r) - 1 == e) return r;
    throw std::runtime_error("e=" + std::to_string(e) + " is not of the form 2^r - 1");
}

std::string first_token_of_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::string tok;
    in >> tok;
    return tok;
}

std::pair<Field, CirculantArray> load_parity(const std::string& path, const std::string& poly) {
    std::string kind = first_token_of_file(path);
    std::ifstream in(path);
    if (kind == "QCA") {
        return read_qca(in, path);
    }
    if (kind == "QCPC") {
        SparseParityCheck S = read_qcpc(in, path);
        int r = r_for_e(S.e);
        Field f(r, resolve_poly(r, poly));
        return {f, S.to_array()};
    }
    throw std::runtime_error(path + ": expected a QCA or QCPC file, found '" + kind + "'");
}

DbmFile load_dbm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    return read_dbm(in, path);
}

json classes_json(const ConjugacyClasses& cc) {
    json arr = json::array();
    for (const auto& cls : cc.classes) {
        json c;
        c["representative"] = cls.rep;
        c["eta"] = cls.eta();
        c["members"] = cls.members;
        if (!cls.basis.empty()) {
            std::vector<std::string> basis;
            for (elem b : cls.basis) basis.push_back(ioutil::hex(b));
            c["basis"] = basis;
        }
        arr.push_back(std::move(c));
    }
    return arr;
}

json counter_json(const OpCounter& c) {
    return json{{"adds", c.additions}, {"muls", c.multiplications}};
}

struct CommonFlags {
    bool as_json = false;
};

void emit(const CommonFlags& flags, const json& j, const std::string& text) {
    if (flags.as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ------------------------------------------------------------ field-info --

int cmd_field_info(int r, const std::string& poly, const CommonFlags& flags) {
    Field f(r, resolve_poly(r, poly));
    auto cc = conjugacy_partition(f);
    std::ostringstream text;
    text << "GF(2^" << r << "): q=" << f.q() << " e=" << f.e() << " poly=0x"
         << ioutil::hex(f.poly()) << "\n";
    text << "conjugacy classes (lambda=" << cc.lambda() << "):\n";
    for (const auto& cls : cc.classes) {
        text << "  t=" << cls.rep << " eta=" << cls.eta() << " members:";
        for (int m : cls.members) text << " " << m;
        text << "  basis:";
        for (elem b : cls.basis) text << " " << ioutil::hex(b);
        text << "\n";
    }
    json j;
    j["r"] = r;
    j["q"] = f.q();
    j["e"] = f.e();
    j["poly"] = ioutil::hex(f.poly());
    j["lambda"] = cc.lambda();
    j["classes"] = classes_json(cc);
    emit(flags, j, text.str());
    return 0;
}

// ------------------------------------------------------------- gen-random --

int cmd_gen_random(long e, int k, int n, bool binary, double density, std::uint64_t seed,
                   const std::string& out, const std::string& format, const std::string& poly,
                   const CommonFlags& flags) {
    if (k < 1 || n <= k) throw std::runtime_error("gen-random: need 1 <= k < n");
    int r = r_for_e(e);
    Field f(r, resolve_poly(r, poly));
    Rng rng(seed);
    CirculantArray H = random_circulant_array(f, n - k, n, rng, binary, density);
    std::ostringstream os;
    if (format == "qcpc") {
        if (!binary) throw std::runtime_error("gen-random: qcpc output requires --binary");
        write_qcpc(os, SparseParityCheck::from_array(H));
    } else if (format == "qca") {
        write_qca(os, f, H);
    } else {
        throw std::runtime_error("gen-random: unknown format '" + format + "'");
    }
    write_text_file(out, os.str());
    json j{{"out", out},    {"format", format}, {"e", e},    {"rows", n - k},
           {"cols", n},     {"binary", binary}, {"seed", seed}};
    emit(flags, j,
         "wrote " + out + " (" + std::to_string(n - k) + "x" + std::to_string(n) +
             " circulant array, e=" + std::to_string(e) + ")\n");
    return 0;
}

// -------------------------------------------------------------- transform --

int cmd_transform(const std::string& in, const std::string& out, bool inverse,
                  const CommonFlags& flags) {
    if (inverse) {
        DbmFile file = load_dbm(in);
        CirculantArray G = inverse_transform_array(file.field, file.D);
        std::ostringstream os;
        write_qca(os, file.field, G);
        write_text_file(out, os.str());
        emit(flags, json{{"in", in}, {"out", out}, {"direction", "inverse"}},
             "wrote " + out + "\n");
        return 0;
    }
    std::ifstream is(in);
    if (!is) throw std::runtime_error(in + ": cannot open for reading");
    auto [f, G] = read_qca(is, in);
    DiagonalBlockMatrix D = transform_array(f, G);
    std::ostringstream os;
    write_dbm(os, f, D);
    write_text_file(out, os.str());
    emit(flags, json{{"in", in}, {"out", out}, {"direction", "forward"}}, "wrote " + out + "\n");
    return 0;
}

// --------------------------------------------------------------- ldpc-gen --

int cmd_ldpc_gen(const std::string& pc, const std::string& out, const std::string& profile,
                 bool classes, const std::string& poly, const CommonFlags& flags) {
    auto [f, H] = load_parity(pc, poly);
    GeneratorBuild gb = build_transformed_generator(f, H);
    std::ostringstream os;
    if (classes) {
        if (!gb.binary)
            throw std::runtime_error("ldpc-gen: --classes requires a binary parity check");
        write_dbm_classes(os, f, gb.Gd, gb.classes);
    } else {
        write_dbm(os, f, gb.Gd);
    }
    write_text_file(out, os.str());

    json prof;
    prof["e"] = gb.Gd.e;
    prof["n"] = gb.Gd.n;
    prof["rows"] = H.rows;
    prof["q"] = f.q();
    prof["poly"] = ioutil::hex(f.poly());
    prof["rho"] = gb.profile.rho;
    prof["sigma"] = gb.profile.sigma;
    prof["K"] = gb.profile.K;
    prof["N"] = static_cast<long>(gb.Gd.e) * gb.Gd.n;
    prof["lambda"] = gb.classes.lambda();
    prof["binary"] = gb.binary;
    prof["conjugates_derived"] = gb.conjugates_derived;
    prof["classes"] = classes_json(gb.classes);
    if (!profile.empty()) write_text_file(profile, prof.dump(2) + "\n");

    std::ostringstream text;
    text << "wrote " << out << ": K=" << gb.profile.K
         << " N=" << static_cast<long>(gb.Gd.e) * gb.Gd.n << " lambda=" << gb.classes.lambda()
         << (classes ? " (class-compressed)" : "") << "\n";
    emit(flags, prof, text.str());
    return 0;
}

// ----------------------------------------------------------------- encode --

int cmd_encode(const std::string& mode, const std::string& gen, const std::string& msg,
               const std::string& out, bool count_ops, const CommonFlags& flags) {
    std::string kind = first_token_of_file(gen);
    StepCounters ops;
    std::vector<std::vector<elem>> codewords;
    std::size_t expect = 0;

    if (mode == "traditional") {
        if (kind != "QCA")
            throw std::runtime_error("encode: traditional mode needs a QCA generator file");
        std::ifstream is(gen);
        auto [f, G] = read_qca(is, gen);
        std::ifstream ms(msg);
        if (!ms) throw std::runtime_error(msg + ": cannot open for reading");
        auto messages = read_hex_vectors(ms, f, msg);
        expect = static_cast<std::size_t>(G.e) * G.rows;
        for (const auto& m : messages) {
            if (m.size() != expect)
                throw std::runtime_error(msg + ": message length " + std::to_string(m.size()) +
                                         " != e*k = " + std::to_string(expect));
            codewords.push_back(
                encode_traditional(f, m, G, count_ops ? &ops.traditional : nullptr));
        }
    } else if (mode == "etd" || mode == "etd-binary") {
        if (kind != "DBM")
            throw std::runtime_error("encode: " + mode + " mode needs a DBM generator file");
        DbmFile file = load_dbm(gen);
        const Field& f = file.field;
        ConjugacyClasses cc = file.classes ? *file.classes : conjugacy_partition(f);
        std::ifstream ms(msg);
        if (!ms) throw std::runtime_error(msg + ": cannot open for reading");
        auto messages = read_hex_vectors(ms, f, msg);
        auto sigma = file.D.sigma();
        expect = static_cast<std::size_t>(file.D.total_rows());
        for (const auto& mv : messages) {
            if (mv.size() != expect)
                throw std::runtime_error(msg + ": message length " + std::to_string(mv.size()) +
                                         " != K = " + std::to_string(expect));
            Message m(mv, sigma);
            if (mode == "etd")
                codewords.push_back(encode_etd(f, m, file.D, count_ops ? &ops : nullptr));
            else
                codewords.push_back(
                    encode_etd_binary(f, m, file.D, cc, count_ops ? &ops : nullptr));
        }
    } else {
        throw std::runtime_error("encode: unknown mode '" + mode + "'");
    }

    std::ostringstream os;
    write_hex_vectors(os, codewords);
    write_text_file(out, os.str());

    json j{{"mode", mode},
           {"out", out},
           {"codewords", codewords.size()},
           {"message_symbols", expect}};
    std::ostringstream text;
    text << "wrote " << out << " (" << codewords.size() << " codeword"
         << (codewords.size() == 1 ? "" : "s") << ")\n";
    if (count_ops) {
        j["ops"] = json{{"step1", counter_json(ops.step1)},
                        {"postprocess", counter_json(ops.postprocess)},
                        {"inverse_transform", counter_json(ops.transform)},
                        {"traditional", counter_json(ops.traditional)}};
        j["ops"]["total"] = counter_json(ops.total());
        text << "ops: step1 " << ops.step1.multiplications << "m/" << ops.step1.additions
             << "a, postprocess " << ops.postprocess.multiplications << "m/"
             << ops.postprocess.additions << "a, inverse-transform "
             << ops.transform.multiplications << "m/" << ops.transform.additions
             << "a, traditional " << ops.traditional.multiplications << "m/"
             << ops.traditional.additions << "a\n";
    }
    emit(flags, j, text.str());
    return 0;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::string& pc, const std::string& cw, const std::string& poly,
               const CommonFlags& flags) {
    // QCPC inputs verify through the support sets, QCA through the dense cells
    std::string kind = first_token_of_file(pc);
    std::optional<SparseParityCheck> sparse;
    std::optional<std::pair<Field, CirculantArray>> dense;
    if (kind == "QCPC") {
        std::ifstream in(pc);
        sparse = read_qcpc(in, pc);
    } else {
        dense = load_parity(pc, poly);
    }
    const Field f = sparse ? Field(r_for_e(sparse->e), resolve_poly(r_for_e(sparse->e), poly))
                           : dense->first;
    std::ifstream cs(cw);
    if (!cs) throw std::runtime_error(cw + ": cannot open for reading");
    auto vecs = read_hex_vectors(cs, f, cw);
    json failures = json::array();
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        const bool ok = sparse ? verify_parity(f, vecs[i], *sparse)
                               : verify_parity(f, vecs[i], dense->second);
        if (!ok) failures.push_back(i);
    }
    json j{{"codewords", vecs.size()}, {"ok", failures.empty()}, {"failures", failures}};
    std::ostringstream text;
    if (failures.empty())
        text << vecs.size() << " codeword" << (vecs.size() == 1 ? "" : "s") << " verified\n";
    else
        text << failures.size() << " of " << vecs.size() << " codewords failed parity\n";
    emit(flags, j, text.str());
    return failures.empty() ? 0 : 1;
}

// ------------------------------------------------------------------ bench --

int cmd_bench(const std::string& pc, const std::string& gen, const std::string& modes_csv,
              int trials, std::uint64_t seed, const std::string& json_out,
              const std::string& poly, const CommonFlags& flags) {
    std::optional<CodeInstance> inst;
    if (!pc.empty()) {
        auto [f, H] = load_parity(pc, poly);
        inst = make_instance(f, H);
    } else if (!gen.empty()) {
        DbmFile file = load_dbm(gen);
        CodeInstance ci{file.field,
                        CirculantArray{},
                        file.D,
                        file.classes ? *file.classes : conjugacy_partition(file.field),
                        RankProfile{},
                        blocks_satisfy_conjugacy(file.field, file.D),
                        std::nullopt};
        ci.profile.sigma = file.D.sigma();
        for (int s : ci.profile.sigma) ci.profile.rho.push_back(file.D.n - s);
        ci.profile.K = file.D.total_rows();
        if (ci.full_rank() && !file.D.blocks.empty() && file.D.blocks[0].rows > 0)
            ci.G = inverse_transform_array(file.field, file.D);
        inst = std::move(ci);
    } else {
        throw std::runtime_error("bench: provide --pc or --gen");
    }

    std::vector<EncodeMode> modes;
    auto want = [&](const std::string& name) {
        if (modes_csv == "all") return true;
        std::stringstream ss(modes_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (tok == name) return true;
        return false;
    };
    if (want("traditional") && inst->G) modes.push_back(EncodeMode::traditional);
    if (want("etd")) modes.push_back(EncodeMode::etd);
    if (want("etd-binary") && inst->binary) modes.push_back(EncodeMode::etd_binary);
    if (modes.empty()) throw std::runtime_error("bench: no applicable modes");

    const Field& f = inst->field;
    const long e = inst->e(), n = inst->n();
    const long sigma0 = inst->profile.sigma.empty() ? 0 : inst->profile.sigma[0];
    const long k = inst->full_rank() ? sigma0 : inst->profile.K / std::max(1L, e);

    json j;
    j["params"] = json{{"e", e},           {"n", n},
                       {"k", k},           {"r", f.r()},
                       {"q", f.q()},       {"N", e * n},
                       {"K", inst->profile.K}, {"binary", inst->binary},
                       {"full_rank", inst->full_rank()}, {"trials", trials},
                       {"seed", seed}};
    std::ostringstream text;
    text << "code: e=" << e << " n=" << n << " K=" << inst->profile.K << " N=" << e * n
         << " over GF(" << f.q() << ")\n";

    json measured;
    std::uint64_t trad_muls = 0, etd_step1_muls = 0, etd_all_muls = 0;
    for (EncodeMode mode : modes) {
        StepCounters ops = count_encode(*inst, mode, trials, seed);
        json per_step{{"step1", counter_json(ops.step1)},
                      {"postprocess", counter_json(ops.postprocess)},
                      {"inverse_transform", counter_json(ops.transform)},
                      {"traditional", counter_json(ops.traditional)}};
        OpCounter t = ops.total();
        measured[mode_name(mode)] =
            json{{"adds", t.additions}, {"muls", t.multiplications}, {"per_step", per_step}};
        if (mode == EncodeMode::traditional) trad_muls = ops.traditional.multiplications;
        if (mode == EncodeMode::etd) {
            etd_step1_muls = ops.step1.multiplications;
            etd_all_muls = t.multiplications;
        }
        text << "  " << mode_name(mode) << ": " << t.multiplications << " muls, " << t.additions
             << " adds";
        if (mode != EncodeMode::traditional)
            text << " (step1 " << ops.step1.multiplications << "m/" << ops.step1.additions
                 << "a, inverse-transform " << ops.transform.multiplications << "m/"
                 << ops.transform.additions << "a)";
        text << "\n";
    }
    j["measured"] = measured;

    json ratios;
    if (trad_muls && etd_step1_muls) {
        const double excl = static_cast<double>(trad_muls) / static_cast<double>(etd_step1_muls);
        ratios["measured_mul_ratio_transform_excluded"] = excl;
        text << "measured traditional/etd multiplication ratio (inverse transform excluded): "
             << excl << "\n";
        if (etd_all_muls) {
            const double incl = static_cast<double>(trad_muls) / static_cast<double>(etd_all_muls);
            ratios["measured_mul_ratio_transform_included"] = incl;
            text << "measured traditional/etd multiplication ratio (inverse transform included): "
                 << incl << "\n";
        }
    }

    if (k >= 1 && k < n) {
        ComplexityReport rep = analytic_report(e, n, k, f.r());
        j["analytic"] = json{{"traditional_symbol_ops", rep.traditional_symbol_ops},
                             {"etd_step1_symbol_ops", rep.etd_step1_symbol_ops},
                             {"etd_transform_symbol_ops", rep.etd_transform_symbol_ops},
                             {"binary_step1_bits", rep.binary_step1_bits},
                             {"binary_step2_bits", rep.binary_step2_bits},
                             {"binary_step3_bits", rep.binary_step3_bits},
                             {"memory_symbols", rep.memory_symbols}};
        ratios["analytic_symbol_ratio"] = rep.ratio_step1;
        ratios["analytic_symbol_ratio_with_transform"] = rep.ratio_with_transform;
        ratios["analytic_bit_ratio"] = rep.ratio_binary;
        ratios["analytic_bit_ratio_step1_only"] = rep.ratio_binary_step1_only;
        text << "analytic symbol-operation ratio: " << rep.ratio_step1
             << " (with transform term: " << rep.ratio_with_transform << ")\n";
        text << "analytic bit-operation ratio: " << rep.ratio_binary
             << " (step 1 only: " << rep.ratio_binary_step1_only << ")\n";
        json refs = json::object();
        if (rep.reference_nonbinary)
            refs["nonbinary"] = json{{"ratio", rep.reference_nonbinary->ratio},
                                     {"percent", rep.reference_nonbinary->percent}};
        if (rep.reference_binary)
            refs["binary"] = json{{"ratio", rep.reference_binary->ratio},
                                  {"percent", rep.reference_binary->percent}};
        j["paper_reference_values"] = refs;
        if (!refs.empty())
            text << "reference ratios for these parameters: " << refs.dump() << "\n";
    }
    j["ratios"] = ratios;

    if (!json_out.empty()) write_text_file(json_out, j.dump(2) + "\n");
    emit(flags, j, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic code encoding in the Galois Fourier transform domain"};
    app.require_subcommand(1);
    CommonFlags flags;

    auto* info =
        app.add_subcommand("field-info", "print field, conjugacy classes, subfield bases");
    int info_r = 3;
    std::string info_poly;
    info->add_option("--r", info_r, "extension degree r")->required();
    info->add_option("--poly", info_poly, "primitive polynomial, hex");
    info->add_flag("--json", flags.as_json, "JSON output");

    auto* gr = app.add_subcommand("gen-random", "generate a random parity-check circulant array");
    long gr_e = 7;
    int gr_k = 2, gr_n = 4;
    bool gr_binary = false;
    double gr_density = 0.5;
    std::uint64_t gr_seed = 1;
    std::string gr_out, gr_format = "qca", gr_poly;
    gr->add_option("--e", gr_e, "circulant size, 2^r - 1")->required();
    gr->add_option("--k", gr_k, "message block count k (array has n-k block rows)")->required();
    gr->add_option("--n", gr_n, "block column count n")->required();
    gr->add_flag("--binary", gr_binary, "binary generators");
    gr->add_option("--density", gr_density, "ones density for binary cells (default 0.5)");
    gr->add_option("--seed", gr_seed, "RNG seed")->required();
    gr->add_option("--out", gr_out, "output file")->required();
    gr->add_option("--format", gr_format, "qca or qcpc (default qca)");
    gr->add_option("--poly", gr_poly, "primitive polynomial, hex");
    gr->add_flag("--json", flags.as_json, "JSON output");

    auto* tr = app.add_subcommand("transform", "circulant array <-> diagonal block matrix");
    std::string tr_in, tr_out;
    bool tr_inverse = false;
    tr->add_option("--in", tr_in, "input file (QCA, or DBM with --inverse)")->required();
    tr->add_option("--out", tr_out, "output file")->required();
    tr->add_flag("--inverse", tr_inverse, "inverse transformation (DBM -> QCA)");
    tr->add_flag("--json", flags.as_json, "JSON output");

    auto* lg =
        app.add_subcommand("ldpc-gen", "build the transformed generator from a parity check");
    std::string lg_pc, lg_out, lg_profile, lg_poly;
    bool lg_classes = false;
    lg->add_option("--pc", lg_pc, "parity check (QCA or QCPC)")->required();
    lg->add_option("--out", lg_out, "output DBM file")->required();
    lg->add_option("--profile", lg_profile, "write rank profile JSON here");
    lg->add_flag("--classes", lg_classes, "class-compressed DBM (binary codes)");
    lg->add_option("--poly", lg_poly, "primitive polynomial for QCPC inputs, hex");
    lg->add_flag("--json", flags.as_json, "JSON output");

    auto* en = app.add_subcommand("encode", "encode message vectors");
    std::string en_mode, en_gen, en_msg, en_out;
    bool en_count = false;
    en->add_option("--mode", en_mode, "traditional | etd | etd-binary")->required();
    en->add_option("--gen", en_gen, "generator file (QCA for traditional, DBM otherwise)")
        ->required();
    en->add_option("--msg", en_msg, "message file, hex symbols, one vector per line")->required();
    en->add_option("--out", en_out, "output codeword file")->required();
    en->add_flag("--count-ops", en_count, "report operation counts");
    en->add_flag("--json", flags.as_json, "JSON output");

    auto* ve = app.add_subcommand("verify", "check codewords against a parity check");
    std::string ve_pc, ve_cw, ve_poly;
    ve->add_option("--pc", ve_pc, "parity check (QCA or QCPC)")->required();
    ve->add_option("--cw", ve_cw, "codeword file")->required();
    ve->add_option("--poly", ve_poly, "primitive polynomial for QCPC inputs, hex");
    ve->add_flag("--json", flags.as_json, "JSON output");

    auto* be = app.add_subcommand("bench", "measure and compare encoding operation counts");
    std::string be_pc, be_gen, be_modes = "all", be_json, be_poly;
    int be_trials = 1;
    std::uint64_t be_seed = 1;
    be->add_option("--pc", be_pc, "parity check (QCA or QCPC)");
    be->add_option("--gen", be_gen, "generator DBM file");
    be->add_option("--modes", be_modes, "all, or comma list of traditional,etd,etd-binary");
    be->add_option("--trials", be_trials, "trials per mode (default 1)");
    be->add_option("--seed", be_seed, "RNG seed for messages (default 1)");
    be->add_option("--json", be_json, "write the JSON report to this file");
    be->add_option("--poly", be_poly, "primitive polynomial for QCPC inputs, hex");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return cmd_field_info(info_r, info_poly, flags);
        if (*gr)
            return cmd_gen_random(gr_e, gr_k, gr_n, gr_binary, gr_density, gr_seed, gr_out,
                                  gr_format, gr_poly, flags);
        if (*tr) return cmd_transform(tr_in, tr_out, tr_inverse, flags);
        if (*lg) return cmd_ldpc_gen(lg_pc, lg_out, lg_profile, lg_classes, lg_poly, flags);
        if (*en) return cmd_encode(en_mode, en_gen, en_msg, en_out, en_count, flags);
        if (*ve) return cmd_verify(ve_pc, ve_cw, ve_poly, flags);
        if (*be)
            return cmd_bench(be_pc, be_gen, be_modes, be_trials, be_seed, be_json, be_poly, flags);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
