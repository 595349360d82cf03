#include "command.hpp"

#include <cmath>
#include <cstdio>

#include "shen3/dn3.hpp"
#include "shen3/ramanujan.hpp"

#include "verify_suite.hpp"

namespace shen3::cli {

namespace {

double require_kappa2(const Command& cmd)
{
    if (!cmd.kappa2) {
        throw UsageError("this verb requires --kappa2");
    }
    if (!(*cmd.kappa2 > 0.0 && *cmd.kappa2 < 1.0)) {
        throw UsageError("--kappa2 must lie in (0, 1)");
    }
    return *cmd.kappa2;
}

RunOutput run_eval(const Command& cmd)
{
    const double kappa2 = require_kappa2(cmd);
    if (!cmd.u) {
        throw UsageError("eval requires --u");
    }
    const std::complex<double> u = *cmd.u;
    if (cmd.route != Route::wp && u.imag() != 0.0) {
        throw UsageError("the direct route needs a real --u; use --route wp");
    }
    const auto mod = modulus_new(kappa2);
    RunOutput out;
    out.scalars.push_back({"kappa2", kappa2});
    out.scalars.push_back({"u_re", u.real()});
    out.scalars.push_back({"u_im", u.imag()});
    std::optional<double> direct;
    std::optional<std::complex<double>> elliptic;
    if (cmd.route == Route::direct || cmd.route == Route::both) {
        direct = dn3_direct(u.real(), mod);
        out.scalars.push_back({"dn3_direct", *direct});
    }
    if (cmd.route == Route::wp || cmd.route == Route::both) {
        elliptic = dn3_wp(u, mod);
        out.scalars.push_back({"dn3_wp_re", elliptic->real()});
        out.scalars.push_back({"dn3_wp_im", elliptic->imag()});
    }
    if (direct && elliptic) {
        out.scalars.push_back({"abs_diff", std::abs(*direct - elliptic->real())});
    }
    return out;
}

RunOutput run_periods(const Command& cmd)
{
    const double kappa2 = require_kappa2(cmd);
    const auto mod = modulus_new(kappa2);
    const auto geo = periods_via_greenhill(mod);
    const auto gh = greenhill_data(mod);
    RunOutput out;
    out.scalars.push_back({"kappa2", kappa2});
    out.scalars.push_back({"K", geo.K});
    out.scalars.push_back({"Kp", geo.Kp});
    out.scalars.push_back({"pole_height", geo.pole_height});
    out.scalars.push_back({"M2", gh.M2});
    out.scalars.push_back({"k2", gh.k2});
    out.scalars.push_back({"kp2", gh.kp2});
    out.scalars.push_back({"g2", mod.invariants.g2});
    out.scalars.push_back({"g3", mod.invariants.g3});
    out.scalars.push_back({"e1", mod.lattice.e1});
    out.scalars.push_back({"e2", mod.lattice.e2});
    out.scalars.push_back({"e3", mod.lattice.e3});
    return out;
}

RunOutput run_critical(const Command& cmd)
{
    const double kappa2 = require_kappa2(cmd);
    const auto cv = critical_values(modulus_new(kappa2));
    RunOutput out;
    out.scalars.push_back({"kappa2", kappa2});
    out.scalars.push_back({"x1", cv.x1});
    out.scalars.push_back({"x2", cv.x2});
    out.scalars.push_back({"x3", cv.x3});
    return out;
}

RunOutput run_poles(const Command& cmd)
{
    const double kappa2 = require_kappa2(cmd);
    const auto mod = modulus_new(kappa2);
    const std::size_t cells = cmd.grid.value_or(1);
    if (cells < 1) {
        throw UsageError("poles requires --grid >= 1");
    }
    const auto poles = pole_locations(mod, cells);
    RunOutput out;
    out.scalars.push_back({"kappa2", kappa2});
    out.scalars.push_back({"pole_height", 2.0 * mod.lattice.Kp / 3.0});
    Table table;
    table.columns = {"re", "im"};
    for (const auto& p : poles) {
        table.rows.push_back({p.real(), p.imag()});
    }
    out.table = std::move(table);
    return out;
}

RunOutput run_ramanujan(const Command& cmd)
{
    if (!cmd.p) {
        throw UsageError("ramanujan requires --p");
    }
    if (!(*cmd.p > 0.0 && *cmd.p < 1.0)) {
        throw UsageError("--p must lie in (0, 1)");
    }
    const auto par = ramanujan::ramanujan_maps(*cmd.p);
    const auto chk = ramanujan::verify_identity_5_6(*cmd.p);
    RunOutput out;
    out.scalars.push_back({"p", par.p});
    out.scalars.push_back({"angle_a", par.angle_a});
    out.scalars.push_back({"beta", par.beta});
    out.scalars.push_back({"alpha_r", par.alpha_r});
    out.scalars.push_back({"multiplier", par.multiplier});
    out.scalars.push_back({"lhs", chk.lhs});
    out.scalars.push_back({"rhs", chk.rhs});
    out.scalars.push_back({"residual", chk.residual});
    return out;
}

RunOutput run_verify_cmd(const Command& cmd)
{
    const double kappa2 = require_kappa2(cmd);
    RunOutput out;
    out.scalars.push_back({"kappa2", kappa2});
    out.report = run_verify(modulus_new(kappa2), cmd.grid.value_or(100));
    return out;
}

RunOutput run_table(const Command& cmd)
{
    const double kappa2 = require_kappa2(cmd);
    const std::size_t grid = cmd.grid.value_or(100);
    if (grid < 1) {
        throw UsageError("table requires --grid >= 1");
    }
    const auto mod = modulus_new(kappa2);
    RunOutput out;
    out.scalars.push_back({"kappa2", kappa2});
    Table table;
    table.columns = {"u", "dn3_direct", "dn3_wp_re", "dn3_wp_im"};
    for (std::size_t i = 0; i < grid; ++i) {
        const double u =
            2.0 * mod.lattice.K * static_cast<double>(i) / static_cast<double>(grid);
        const auto w = dn3_wp({u, 0.0}, mod);
        table.rows.push_back({u, dn3_direct(u, mod), w.real(), w.imag()});
    }
    out.table = std::move(table);
    return out;
}

}  // namespace

RunOutput run(const Command& cmd)
{
    switch (cmd.verb) {
        case Verb::eval: return run_eval(cmd);
        case Verb::periods: return run_periods(cmd);
        case Verb::critical: return run_critical(cmd);
        case Verb::poles: return run_poles(cmd);
        case Verb::ramanujan: return run_ramanujan(cmd);
        case Verb::verify: return run_verify_cmd(cmd);
        case Verb::table: return run_table(cmd);
    }
    throw UsageError("unknown verb");
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_json_scalar(std::string& text, const Field& field)
{
    text += '"';
    text += field.name;
    text += "\":";
    if (std::holds_alternative<double>(field.value)) {
        text += format_double(std::get<double>(field.value));
    } else if (std::holds_alternative<bool>(field.value)) {
        text += std::get<bool>(field.value) ? "true" : "false";
    } else {
        text += '"';
        text += std::get<std::string>(field.value);
        text += '"';
    }
}

std::string to_json(const RunOutput& out)
{
    std::string text = "{";
    bool first = true;
    for (const auto& field : out.scalars) {
        if (!first) {
            text += ',';
        }
        first = false;
        append_json_scalar(text, field);
    }
    if (out.table) {
        if (!first) {
            text += ',';
        }
        first = false;
        text += "\"columns\":[";
        for (std::size_t i = 0; i < out.table->columns.size(); ++i) {
            if (i > 0) {
                text += ',';
            }
            text += '"';
            text += out.table->columns[i];
            text += '"';
        }
        text += "],\"rows\":[";
        for (std::size_t r = 0; r < out.table->rows.size(); ++r) {
            if (r > 0) {
                text += ',';
            }
            text += '[';
            for (std::size_t c = 0; c < out.table->rows[r].size(); ++c) {
                if (c > 0) {
                    text += ',';
                }
                text += format_double(out.table->rows[r][c]);
            }
            text += ']';
        }
        text += ']';
    }
    if (out.report) {
        if (!first) {
            text += ',';
        }
        text += "\"entries\":[";
        for (std::size_t i = 0; i < out.report->entries.size(); ++i) {
            const auto& e = out.report->entries[i];
            if (i > 0) {
                text += ',';
            }
            text += "{\"name\":\"" + e.name + "\",\"expected\":" + format_double(e.expected) +
                    ",\"actual\":" + format_double(e.actual) +
                    ",\"residual\":" + format_double(e.residual) +
                    ",\"tolerance\":" + format_double(e.tolerance) +
                    ",\"pass\":" + (e.pass ? "true" : "false") + "}";
        }
        text += "],\"overall\":";
        text += out.report->overall ? "true" : "false";
    }
    text += "}\n";
    return text;
}

std::string to_csv(const RunOutput& out)
{
    std::string text;
    if (out.report) {
        text += "name,expected,actual,residual,tolerance,pass\n";
        for (const auto& e : out.report->entries) {
            text += e.name + ',' + format_double(e.expected) + ',' + format_double(e.actual) +
                    ',' + format_double(e.residual) + ',' + format_double(e.tolerance) + ',' +
                    (e.pass ? "true" : "false") + '\n';
        }
        return text;
    }
    if (out.table) {
        for (std::size_t i = 0; i < out.table->columns.size(); ++i) {
            if (i > 0) {
                text += ',';
            }
            text += out.table->columns[i];
        }
        text += '\n';
        for (const auto& row : out.table->rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) {
                    text += ',';
                }
                text += format_double(row[c]);
            }
            text += '\n';
        }
        return text;
    }
    std::string header;
    std::string row;
    for (std::size_t i = 0; i < out.scalars.size(); ++i) {
        if (i > 0) {
            header += ',';
            row += ',';
        }
        header += out.scalars[i].name;
        const auto& v = out.scalars[i].value;
        if (std::holds_alternative<double>(v)) {
            row += format_double(std::get<double>(v));
        } else if (std::holds_alternative<bool>(v)) {
            row += std::get<bool>(v) ? "true" : "false";
        } else {
            row += std::get<std::string>(v);
        }
    }
    return header + '\n' + row + '\n';
}

}  // namespace

std::string format_output(const RunOutput& out, Format format)
{
    return format == Format::json ? to_json(out) : to_csv(out);
}

int exit_code(const RunOutput& out)
{
    if (out.report && !out.report->overall) {
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace shen3::cli
