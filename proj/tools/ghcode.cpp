// ghcode - command-line front end for GH and Fibonacci codes
//
// Exit status: 0 success, 1 "does not exist" (or a failed check),
// 2 usage or malformed input, 3 gap bound violated.

#include <ghcode/ghcode.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using ghcode::Integer;

constexpr int exit_ok = 0;
constexpr int exit_missing = 1;
constexpr int exit_usage = 2;
constexpr int exit_violation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t parse_param(const std::string& text) {
    Integer v;
    try {
        v = ghcode::parse_integer(text);
    } catch (const std::exception&) {
        throw UsageError("invalid integer '" + text + "'");
    }
    if (v > INT64_MAX || v < INT64_MIN) throw UsageError("integer out of range: " + text);
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_a(const std::string& text) {
    const auto a = parse_param(text);
    if (a > -2) throw UsageError("--a must be <= -2, got " + text);
    return a;
}

Integer parse_n(const std::string& text) {
    Integer v;
    try {
        v = ghcode::parse_integer(text);
    } catch (const std::exception&) {
        throw UsageError("invalid integer '" + text + "'");
    }
    if (v < 1) throw UsageError("n must be >= 1, got " + text);
    return v;
}

struct Range {
    std::int64_t lo;
    std::int64_t hi;
};

// "lo:hi" inclusive, or a single value. The separator search skips a leading
// sign so "-20:-2" splits correctly.
Range parse_range(const std::string& text) {
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
        const auto v = parse_param(text);
        return {v, v};
    }
    const Range r{parse_param(text.substr(0, colon)), parse_param(text.substr(colon + 1))};
    if (r.lo > r.hi) throw UsageError("range '" + text + "' has lo > hi");
    return r;
}

Range parse_a_range(const std::string& text) {
    const auto r = parse_range(text);
    if (r.hi > -2) throw UsageError("--a values must be <= -2, got " + text);
    return r;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// Shared by encode and decode.
struct CodeChoice {
    std::string code = "gh";
    std::string a;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--code", code, "gh or fib")->check(CLI::IsMember({"gh", "fib"}));
        cmd->add_option("--a", a, "GH parameter (<= -2), required for --code gh");
    }

    std::optional<ghcode::GHCodec> gh() const {
        if (code == "fib") return std::nullopt;
        if (a.empty()) throw UsageError("--a is required for GH codes");
        return ghcode::GHCodec(parse_a(a));
    }
};

int cmd_encode(const CodeChoice& choice, const std::string& algo, const std::vector<std::string>& values) {
    const auto gh = choice.gh();
    int status = exit_ok;
    for (const auto& text : values) {
        const auto n = parse_n(text);
        std::optional<ghcode::Codeword> code;
        if (!gh) code = ghcode::fib_encode(n);
        else if (algo == "simple") code = gh->encode_simple(n).code;
        else code = gh->encode_fast(n).code;
        if (code) {
            std::cout << code->to_string() << '\n';
        } else {
            std::cout << "-\n";
            status = exit_missing;
        }
    }
    return status;
}

int cmd_decode(const CodeChoice& choice, const std::vector<std::string>& codes) {
    const auto gh = choice.gh();
    for (const auto& text : codes) {
        try {
            const auto c = ghcode::Codeword::parse(text);
            std::cout << ghcode::to_string(gh ? gh->decode(c) : ghcode::fib_decode(c)) << '\n';
        } catch (const ghcode::CodeError& e) {
            std::cerr << "error: '" << text << "': " << e.what() << '\n';
            return exit_usage;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: '" << text << "': " << e.what() << '\n';
            return exit_usage;
        }
    }
    return exit_ok;
}

int cmd_exists(const std::string& a_text, const std::vector<std::string>& values, const std::string& range_text,
               const std::string& mode) {
    const ghcode::GHCodec codec(parse_a(a_text));
    std::vector<Integer> ns;
    for (const auto& v : values) ns.push_back(parse_n(v));
    const bool listing = !range_text.empty();
    if (listing) {
        const auto r = parse_range(range_text);
        if (r.lo < 1) throw UsageError("--n range must start at >= 1");
        for (auto n = r.lo; n <= r.hi; ++n) ns.push_back(n);
    }
    if (ns.empty()) throw UsageError("exists needs a value or --n lo:hi");
    const bool label = listing || ns.size() > 1;
    int status = exit_ok;
    for (auto n : ns) {
        const bool ok = mode == "oracle" ? ghcode::oracle_exists(codec.sequence(), n) : codec.exists(n);
        if (label) std::cout << ghcode::to_string(n) << ' ';
        std::cout << (ok ? "yes" : "no") << '\n';
        if (!ok) status = exit_missing;
    }
    return status;
}

int cmd_table(const std::string& a_text, const std::string& n_text, const std::string& format) {
    const auto ar = parse_a_range(a_text);
    const auto nr = parse_range(n_text);
    if (nr.lo < 1) throw UsageError("--n range must start at >= 1");
    if (format == "csv") std::cout << "a,n,code\n";
    for (auto a = ar.hi; a >= ar.lo; --a) {
        const ghcode::GHCodec codec(a);
        for (auto n = nr.lo; n <= nr.hi; ++n) {
            const auto code = codec.encode(n);
            const std::string text = code ? code->to_string() : "-";
            if (format == "csv") std::cout << a << ',' << n << ',' << text << '\n';
            else std::cout << std::setw(4) << a << ' ' << std::setw(8) << n << ' ' << text << '\n';
        }
    }
    return exit_ok;
}

int cmd_gaps(const std::string& a_text, std::int64_t max_n, const std::string& mode, const std::string& format,
             unsigned threads) {
    if (max_n < 1) throw UsageError("--max-n must be >= 1");
    const auto report = ghcode::gap_scan(parse_a(a_text), max_n,
                                         mode == "oracle" ? ghcode::ScanMode::Oracle : ghcode::ScanMode::Fast, threads);
    if (format == "csv") {
        report.write_csv(std::cout);
    } else if (format == "json") {
        std::cout << report.summary().dump(2) << '\n';
    } else {
        std::cout << "a: " << report.a << '\n';
        std::cout << "k: " << (report.k() ? std::to_string(*report.k()) : std::string("-")) << '\n';
        std::cout << "range: 1:" << report.n_hi << '\n';
        std::cout << "missing: " << report.missing.size() << '\n';
        std::cout << "max_run: " << report.max_run << '\n';
        std::cout << "runs:";
        for (const auto& run : report.runs) std::cout << ' ' << run.start << '+' << run.length;
        std::cout << '\n';
    }
    if (report.max_run > report.allowed_run()) {
        std::cerr << "gap bound violated: max_run " << report.max_run << " > " << report.allowed_run() << '\n';
        return exit_violation;
    }
    return exit_ok;
}

// "constant:V", "uniform:LO:HI" or "geometric:P"; values are >= 1.
std::function<std::int64_t(std::mt19937_64&)> parse_distribution(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() == 2 && parts[0] == "constant") {
        const auto v = parse_param(parts[1]);
        if (v < 1) throw UsageError("constant value must be >= 1");
        return [v](std::mt19937_64&) { return v; };
    }
    if (parts.size() == 3 && parts[0] == "uniform") {
        const auto lo = parse_param(parts[1]), hi = parse_param(parts[2]);
        if (lo < 1 || lo > hi) throw UsageError("uniform needs 1 <= lo <= hi");
        return [dist = std::uniform_int_distribution<std::int64_t>(lo, hi)](std::mt19937_64& rng) mutable {
            return dist(rng);
        };
    }
    if (parts.size() == 2 && parts[0] == "geometric") {
        double p = 0;
        try {
            p = std::stod(parts[1]);
        } catch (const std::exception&) {
            throw UsageError("invalid probability '" + parts[1] + "'");
        }
        if (!(p > 0 && p <= 1)) throw UsageError("geometric needs 0 < p <= 1");
        return [dist = std::geometric_distribution<std::int64_t>(p)](std::mt19937_64& rng) mutable {
            return dist(rng) + 1;
        };
    }
    throw UsageError("unknown distribution '" + spec + "'");
}

int cmd_bench(const std::string& dist_spec, std::int64_t count, const std::vector<std::string>& codes,
              std::uint64_t seed) {
    if (count < 0) throw UsageError("--count must be >= 0");
    auto draw = parse_distribution(dist_spec);
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> values(static_cast<std::size_t>(count));
    for (auto& v : values) v = draw(rng);

    std::cout << "dist=" << dist_spec << " count=" << count << " seed=" << seed << '\n';
    std::cout << std::left << std::setw(10) << "codec" << std::right << std::setw(10) << "encoded" << std::setw(10)
              << "skipped" << std::setw(14) << "total_bits" << std::setw(12) << "bits/value" << std::setw(12) << "ms"
              << '\n';
    for (const auto& name : codes) {
        std::optional<ghcode::GHCodec> gh;
        if (name.rfind("gh:", 0) == 0) gh.emplace(parse_a(name.substr(3)));
        else if (name != "fib") throw UsageError("unknown codec '" + name + "' (use fib or gh:A)");

        const auto start = std::chrono::steady_clock::now();
        std::uint64_t bits = 0, encoded = 0, skipped = 0;
        for (auto v : values) {
            const auto code = gh ? gh->encode(v) : std::optional(ghcode::fib_encode(v));
            if (!code) {
                ++skipped;
                continue;
            }
            bits += code->size();
            ++encoded;
        }
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const double per_value = encoded ? static_cast<double>(bits) / static_cast<double>(encoded) : 0.0;
        std::cout << std::left << std::setw(10) << name << std::right << std::setw(10) << encoded << std::setw(10)
                  << skipped << std::setw(14) << bits << std::setw(12) << std::fixed << std::setprecision(3)
                  << per_value << std::setw(12) << std::setprecision(1) << ms << '\n';
    }
    return exit_ok;
}

int cmd_verify(const std::string& a_text, std::int64_t max_n) {
    if (max_n < 1) throw UsageError("--max-n must be >= 1");
    const ghcode::GHCodec codec(parse_a(a_text));
    std::int64_t nonexistent = 0, disagreements = 0, roundtrip_failures = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto fast = codec.encode_fast(n);
        const auto simple = codec.encode_simple(n);
        const bool oracle = ghcode::oracle_exists(codec.sequence(), n);
        if (fast.code.has_value() != oracle || simple.code.has_value() != oracle) {
            ++disagreements;
            std::cerr << "disagreement at n=" << n << ": fast=" << fast.code.has_value()
                      << " simple=" << simple.code.has_value() << " oracle=" << oracle << '\n';
        }
        if (!oracle) ++nonexistent;
        for (const auto* out : {&fast, &simple}) {
            if (out->code && codec.decode(*out->code) != n) {
                ++roundtrip_failures;
                std::cerr << "round trip failed at n=" << n << ": " << out->code->to_string() << '\n';
            }
        }
    }
    const bool pass = disagreements == 0 && roundtrip_failures == 0;
    std::cout << "a=" << codec.a() << " n=1:" << max_n << " nonexistent=" << nonexistent
              << " disagreements=" << disagreements << " roundtrip_failures=" << roundtrip_failures << ' '
              << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? exit_ok : exit_missing;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cmd_stream_pack(const CodeChoice& choice, const std::string& out_path, const std::string& in_path,
                    const std::vector<std::string>& args) {
    std::vector<std::string> texts = args;
    if (!in_path.empty()) {
        std::ifstream in(in_path);
        if (!in) throw UsageError("cannot open '" + in_path + "'");
        for (std::string t; in >> t;) texts.push_back(t);
    } else if (texts.empty()) {
        for (std::string t; std::cin >> t;) texts.push_back(t);
    }
    std::vector<Integer> values;
    for (const auto& t : texts) values.push_back(parse_n(t));

    std::int16_t a = 0;
    const auto codec = choice.code == "fib" ? ghcode::Codec::Fibonacci : ghcode::Codec::GH;
    if (codec == ghcode::Codec::GH) {
        if (choice.a.empty()) throw UsageError("--a is required for GH streams");
        const auto wide = parse_a(choice.a);
        if (wide < INT16_MIN) throw UsageError("--a does not fit the 16-bit header field");
        a = static_cast<std::int16_t>(wide);
    }
    std::vector<std::uint8_t> doc;
    try {
        doc = ghcode::stream_encode(codec, a, values);
    } catch (const ghcode::UnencodableValue& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_missing;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out.write(reinterpret_cast<const char*>(doc.data()), static_cast<std::streamsize>(doc.size()));
    std::cout << "wrote " << values.size() << " values, " << (doc.size() - ghcode::stream_header_size)
              << " payload bytes to " << out_path << '\n';
    return exit_ok;
}

int cmd_stream_unpack(const std::string& path, bool resync) {
    const auto doc = read_file(path);
    try {
        if (!resync) {
            for (auto v : ghcode::stream_decode(doc)) std::cout << ghcode::to_string(v) << '\n';
            return exit_ok;
        }
        const auto result = ghcode::resync_decode(doc);
        for (const auto& t : result.tokens) {
            if (t.is_value()) std::cout << "value " << ghcode::to_string(t.value);
            else std::cout << "garbage";
            std::cout << " [" << t.start << ',' << t.end << ")\n";
        }
        return exit_ok;
    } catch (const ghcode::StreamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GH and Fibonacci universal integer codes"};
    app.require_subcommand(1);

    CodeChoice encode_choice, decode_choice, pack_choice;
    std::string algo = "fast", mode = "fast", format = "text", a_text, n_text, dist = "geometric:0.05", out_path,
                in_path;
    std::vector<std::string> items, codes{"fib", "gh:-2", "gh:-3", "gh:-4"};
    std::int64_t max_n = 100, count = 100000;
    std::uint64_t seed = 42;
    unsigned threads = default_threads();
    bool resync = false;

    auto* encode = app.add_subcommand("encode", "print codewords for integers");
    encode_choice.add_to(encode);
    encode->add_option("--algo", algo, "fast or simple")->check(CLI::IsMember({"fast", "simple"}));
    encode->add_option("values", items, "integers >= 1")->required();

    auto* decode = app.add_subcommand("decode", "print the integer for each codeword");
    decode_choice.add_to(decode);
    decode->add_option("codes", items, "codewords such as 01011")->required();

    auto* exists = app.add_subcommand("exists", "decide whether GH codes exist");
    exists->add_option("--a", a_text, "GH parameter")->required();
    exists->add_option("--n", n_text, "inclusive range lo:hi");
    exists->add_option("--mode", mode, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
    exists->add_option("values", items, "integers >= 1");

    auto* table = app.add_subcommand("table", "codes for a grid of parameters and integers");
    table->add_option("--a", a_text, "parameter or range lo:hi")->required();
    table->add_option("--n", n_text, "integer or range lo:hi")->required();
    table->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    auto* gaps = app.add_subcommand("gaps", "runs of consecutive integers without a code");
    gaps->add_option("--a", a_text, "GH parameter")->required();
    gaps->add_option("--max-n", max_n, "scan 1..max-n");
    gaps->add_option("--mode", mode, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
    gaps->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    gaps->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "bits per value under several codes");
    bench->add_option("--dist", dist, "constant:V, uniform:LO:HI or geometric:P");
    bench->add_option("--count", count, "number of values");
    bench->add_option("--codes", codes, "fib and/or gh:A")->delimiter(',');
    bench->add_option("--seed", seed, "random seed (default 42)");

    auto* verify = app.add_subcommand("verify", "cross-check both algorithms against the brute-force oracle");
    verify->add_option("--a", a_text, "GH parameter")->required();
    verify->add_option("--max-n", max_n, "check 1..max-n");

    auto* pack = app.add_subcommand("stream-pack", "write integers to a GHC1 stream file");
    pack_choice.add_to(pack);
    pack->add_option("--out,-o", out_path, "output file")->required();
    pack->add_option("--in,-i", in_path, "whitespace-separated integers (default: arguments or stdin)");
    pack->add_option("values", items, "integers >= 1");

    auto* unpack = app.add_subcommand("stream-unpack", "read integers from a GHC1 stream file");
    unpack->add_option("file", in_path, "stream file")->required();
    unpack->add_flag("--resync", resync, "tolerate damage and report value/garbage spans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (encode->parsed()) return cmd_encode(encode_choice, algo, items);
        if (decode->parsed()) return cmd_decode(decode_choice, items);
        if (exists->parsed()) return cmd_exists(a_text, items, n_text, mode);
        if (table->parsed()) return cmd_table(a_text, n_text, format);
        if (gaps->parsed()) return cmd_gaps(a_text, max_n, mode, format, threads);
        if (bench->parsed()) return cmd_bench(dist, count, codes, seed);
        if (verify->parsed()) return cmd_verify(a_text, max_n);
        if (pack->parsed()) return cmd_stream_pack(pack_choice, out_path, in_path, items);
        if (unpack->parsed()) return cmd_stream_unpack(in_path, resync);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
