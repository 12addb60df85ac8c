#include "fcext/checkpoint.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace fcext {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr uint32_t kFormat = 1;
constexpr char kMagic[4] = {'F', 'C', 'X', 'B'};

uint64_t fnv1a(const std::string& data, uint64_t h = 0xcbf29ce484222325ULL)
{
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Writer {
    std::string buf;

    void u8(uint8_t v) { buf.push_back((char)v); }
    void u32(uint32_t v)
    {
        for (int k = 0; k < 4; ++k)
            buf.push_back((char)(v >> (8 * k)));
    }
    void u64(uint64_t v)
    {
        for (int k = 0; k < 8; ++k)
            buf.push_back((char)(v >> (8 * k)));
    }
    void i32(int32_t v) { u32((uint32_t)v); }

    void free_elt(const FreeElt& x)
    {
        u32((uint32_t)x.terms.size());
        for (const ModMono& t : x.terms) {
            u64(t.m.bits);
            i32(t.slot);
        }
    }
    void ints(const std::vector<int>& v)
    {
        u32((uint32_t)v.size());
        for (int d : v)
            i32(d);
    }
};

struct Reader {
    const std::string& buf;
    size_t pos = 0;
    const Algebra* alg;

    uint8_t u8()
    {
        FCEXT_CHECK(pos + 1 <= buf.size(), "checkpoint: truncated file");
        return (uint8_t)buf[pos++];
    }
    uint32_t u32()
    {
        FCEXT_CHECK(pos + 4 <= buf.size(), "checkpoint: truncated file");
        uint32_t v = 0;
        for (int k = 0; k < 4; ++k)
            v |= (uint32_t)(uint8_t)buf[pos++] << (8 * k);
        return v;
    }
    uint64_t u64()
    {
        FCEXT_CHECK(pos + 8 <= buf.size(), "checkpoint: truncated file");
        uint64_t v = 0;
        for (int k = 0; k < 8; ++k)
            v |= (uint64_t)(uint8_t)buf[pos++] << (8 * k);
        return v;
    }
    int32_t i32() { return (int32_t)u32(); }

    FreeElt free_elt()
    {
        uint32_t n = u32();
        FreeElt x;
        x.terms.reserve(n);
        for (uint32_t k = 0; k < n; ++k) {
            uint64_t bits = u64();
            int32_t slot = i32();
            x.terms.push_back(ModMono{alg->mono(bits), slot});
        }
        for (size_t k = 1; k < x.terms.size(); ++k)
            FCEXT_CHECK(x.terms[k - 1] > x.terms[k], "checkpoint: unsorted terms");
        return x;
    }
    std::vector<int> ints()
    {
        uint32_t n = u32();
        std::vector<int> v(n);
        for (uint32_t k = 0; k < n; ++k)
            v[k] = i32();
        return v;
    }
};

void write_file(const fs::path& path, const std::string& payload)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        FCEXT_CHECK(out.good(), "checkpoint: cannot write " + tmp.string());
        out.write(kMagic, 4);
        Writer head;
        head.u32(kFormat);
        head.u64(payload.size());
        head.u64(fnv1a(payload));
        out.write(head.buf.data(), (std::streamsize)head.buf.size());
        out.write(payload.data(), (std::streamsize)payload.size());
        FCEXT_CHECK(out.good(), "checkpoint: write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    FCEXT_CHECK(in.good(), "checkpoint: cannot open " + path.string());
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    FCEXT_CHECK(all.size() >= 24 && all.compare(0, 4, kMagic, 4) == 0, "checkpoint: bad header in " + path.string());
    Reader head{all, 4, nullptr};
    uint32_t fmt = head.u32();
    uint64_t size = head.u64();
    uint64_t sum = head.u64();
    FCEXT_CHECK(fmt == kFormat, "checkpoint: unsupported format");
    FCEXT_CHECK(all.size() == 24 + size, "checkpoint: size mismatch in " + path.string());
    std::string payload = all.substr(24);
    FCEXT_CHECK(fnv1a(payload) == sum, "checkpoint: checksum mismatch in " + path.string());
    return payload;
}

fs::path stage_path(const fs::path& dir, int s, int t_done)
{
    return dir / ("stage" + std::to_string(s) + ".t" + std::to_string(t_done) + ".bin");
}

fs::path pres_path(const fs::path& dir)
{
    return dir / "presentation.bin";
}

fs::path chainmaps_path(const fs::path& dir, int t_done)
{
    return dir / ("chainmaps.t" + std::to_string(t_done) + ".bin");
}

void drop_stale(const fs::path& dir, int t_done)
{
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        std::string name = entry.path().filename().string();
        bool stage_like = name.rfind("stage", 0) == 0 || name.rfind("chainmaps", 0) == 0;
        if (!stage_like)
            continue;
        std::string tag = ".t" + std::to_string(t_done) + ".bin";
        if (name.size() < tag.size() || name.compare(name.size() - tag.size(), tag.size(), tag) != 0)
            fs::remove(entry.path(), ec);
    }
}

}  // namespace

std::string RunStamp::hash() const
{
    uint64_t h = fnv1a(module_source);
    h = fnv1a(literal_step1 ? "literal" : "pruned", h);
    h = fnv1a(triple_criterion ? "triple" : "plain", h);
    h = fnv1a("order=fdeg-revlex-v1", h);
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", (unsigned long long)h);
    return out;
}

namespace checkpoint {

bool exists(const fs::path& dir)
{
    return fs::exists(dir / "manifest.json");
}

std::optional<CheckpointInfo> read_info(const fs::path& dir)
{
    if (!checkpoint::exists(dir))
        return std::nullopt;
    std::ifstream in(dir / "manifest.json");
    json j = json::parse(in, nullptr, true);
    CheckpointInfo info;
    info.format = j.at("format").get<int>();
    info.config_hash = j.at("config_hash").get<std::string>();
    info.t_done = j.at("t_done").get<int>();
    info.s_max = j.at("s_max").get<int>();
    info.module_source = j.at("module_source").get<std::string>();
    info.literal_step1 = j.at("literal_step1").get<bool>();
    info.triple_criterion = j.at("triple_criterion").get<bool>();
    return info;
}

void save(const fs::path& dir, const Resolution& res, const RunStamp& stamp)
{
    fs::create_directories(dir);
    {
        Writer w;
        const ModulePresentation& p = res.presentation();
        w.ints(p.gen_degrees);
        w.u32((uint32_t)p.relations.size());
        for (const FreeElt& x : p.relations)
            w.free_elt(x);
        write_file(pres_path(dir), w.buf);
    }
    for (int s = 1; s <= res.s_max(); ++s) {
        Resolution::StageData sd = res.export_stage(s);
        Writer w;
        w.ints(sd.gen_degs);
        w.u32((uint32_t)sd.d_vals.size());
        for (const FreeElt& x : sd.d_vals)
            w.free_elt(x);
        w.u32((uint32_t)sd.gb_entries.size());
        for (size_t k = 0; k < sd.gb_entries.size(); ++k) {
            const GBEntry& e = sd.gb_entries[k];
            w.free_elt(e.elt);
            w.u8((uint8_t)e.origin.kind);
            w.i32(e.origin.a);
            w.i32(e.origin.b);
            w.u8(e.origin.exp2 ? 1 : 0);
            w.free_elt(sd.gb_q_rows[k]);
        }
        w.i32(sd.gb_deg_done);
        write_file(stage_path(dir, s, res.t_done()), w.buf);
    }
    json j;
    j["format"] = (int)kFormat;
    j["config_hash"] = stamp.hash();
    j["t_done"] = res.t_done();
    j["s_max"] = res.s_max();
    j["module_source"] = stamp.module_source;
    j["literal_step1"] = stamp.literal_step1;
    j["triple_criterion"] = stamp.triple_criterion;
    fs::path tmp = dir / "manifest.json.tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump(2) << "\n";
        FCEXT_CHECK(out.good(), "checkpoint: manifest write failed");
    }
    fs::rename(tmp, dir / "manifest.json");
    drop_stale(dir, res.t_done());
}

Resolution load(const fs::path& dir, std::shared_ptr<const Algebra> alg, const RunStamp& stamp, int s_max,
                GroebnerOptions gb_opt)
{
    auto info = read_info(dir);
    FCEXT_CHECK(info.has_value(), "checkpoint: no manifest in " + dir.string());
    FCEXT_CHECK(info->config_hash == stamp.hash(),
                "checkpoint: config hash mismatch (stored " + info->config_hash + ", run " + stamp.hash() + ")");
    FCEXT_CHECK(info->s_max == s_max, "checkpoint: s_max mismatch (stored " + std::to_string(info->s_max) + ")");

    ModulePresentation pres;
    {
        std::string payload = read_file(pres_path(dir));
        Reader r{payload, 0, alg.get()};
        pres.gen_degrees = r.ints();
        uint32_t n = r.u32();
        for (uint32_t k = 0; k < n; ++k)
            pres.relations.push_back(r.free_elt());
        FCEXT_CHECK(r.pos == payload.size(), "checkpoint: trailing bytes in presentation");
    }
    std::vector<Resolution::StageData> stages;
    for (int s = 1; s <= s_max; ++s) {
        std::string payload = read_file(stage_path(dir, s, info->t_done));
        Reader r{payload, 0, alg.get()};
        Resolution::StageData sd;
        sd.gen_degs = r.ints();
        uint32_t nd = r.u32();
        for (uint32_t k = 0; k < nd; ++k)
            sd.d_vals.push_back(r.free_elt());
        uint32_t ne = r.u32();
        for (uint32_t k = 0; k < ne; ++k) {
            GBEntry e;
            e.elt = r.free_elt();
            e.origin.kind = (Provenance::Kind)r.u8();
            e.origin.a = r.i32();
            e.origin.b = r.i32();
            e.origin.exp2 = r.u8() != 0;
            FCEXT_CHECK(!e.elt.is_zero(), "checkpoint: zero basis entry");
            e.lead = leading(e.elt);
            sd.gb_entries.push_back(std::move(e));
            sd.gb_q_rows.push_back(r.free_elt());
        }
        sd.gb_deg_done = r.i32();
        FCEXT_CHECK(r.pos == payload.size(), "checkpoint: trailing bytes in stage file");
        stages.push_back(std::move(sd));
    }
    ResolveOptions opt;
    opt.s_max = s_max;
    opt.gb = gb_opt;
    Resolution res(std::move(alg), std::move(pres), opt, std::move(stages), info->t_done);
    res.verify_complex();
    res.verify_minimality();
    return res;
}

void save_chainmaps(const fs::path& dir, int t_done, const std::vector<ChainMapBlob>& maps)
{
    fs::create_directories(dir);
    Writer w;
    w.u32((uint32_t)maps.size());
    for (const ChainMapBlob& m : maps) {
        w.i32(m.s);
        w.i32(m.t);
        w.i32(m.index);
        w.u32((uint32_t)m.levels.size());
        for (const auto& level : m.levels) {
            w.u32((uint32_t)level.size());
            for (const auto& [j, val] : level) {
                w.i32(j);
                w.free_elt(val);
            }
        }
    }
    write_file(chainmaps_path(dir, t_done), w.buf);
}

std::vector<ChainMapBlob> load_chainmaps(const fs::path& dir, int t_done, const Algebra& alg)
{
    fs::path path = chainmaps_path(dir, t_done);
    if (!fs::exists(path))
        return {};
    std::string payload = read_file(path);
    Reader r{payload, 0, &alg};
    std::vector<ChainMapBlob> maps((size_t)r.u32());
    for (ChainMapBlob& m : maps) {
        m.s = r.i32();
        m.t = r.i32();
        m.index = r.i32();
        m.levels.resize(r.u32());
        for (auto& level : m.levels) {
            level.resize(r.u32());
            for (auto& [j, val] : level) {
                j = r.i32();
                val = r.free_elt();
            }
        }
    }
    FCEXT_CHECK(r.pos == payload.size(), "checkpoint: trailing bytes in chain maps");
    return maps;
}

}  // namespace checkpoint

}  // namespace fcext
