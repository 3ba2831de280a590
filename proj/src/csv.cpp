#include "wavesearch/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace wavesearch {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void write_header(std::ofstream& out, const HeaderBlock& header) {
    for (const auto& [key, value] : header) {
        out << "# " << key << " = " << value << '\n';
    }
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

std::string format_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_trajectory_csv(const std::string& path, const Trajectory& trajectory,
                          const HeaderBlock& header, const IndexList* mode_indices) {
    std::ofstream out = open_out(path);
    write_header(out, header);

    const bool per_mode = mode_indices != nullptr && trajectory.has_modes();
    const bool tagged = trajectory.model != "full";
    out << "t,t_over_tau,p_initial,p_searched,norm,p_spectator_max";
    if (per_mode) {
        for (Eigen::Index k = 0; k < mode_indices->size(); ++k) {
            out << ",p_" << (*mode_indices)(k);
        }
    }
    if (tagged) out << ",model";
    out << '\n';

    for (Eigen::Index i = 0; i < trajectory.sample_count(); ++i) {
        out << format_value(trajectory.times(i)) << ','
            << format_value(trajectory.times(i) / trajectory.tau) << ','
            << format_value(trajectory.p_initial(i)) << ','
            << format_value(trajectory.p_searched(i)) << ','
            << format_value(trajectory.norm(i)) << ','
            << format_value(trajectory.p_spectator_max(i));
        if (per_mode) {
            for (Eigen::Index k = 0; k < trajectory.modes.cols(); ++k) {
                out << ',' << format_value(trajectory.modes(i, k));
            }
        }
        if (tagged) out << ',' << trajectory.model;
        out << '\n';
    }
    finish(out, path);
}

void write_compare_csv(const std::string& path, const Trajectory& full,
                       const RwaModel& model, const HeaderBlock& header) {
    std::ofstream out = open_out(path);
    write_header(out, header);
    out << "t,t_over_tau,p_initial_full,p_searched_full,p_initial_rwa,p_searched_rwa\n";
    for (Eigen::Index i = 0; i < full.sample_count(); ++i) {
        const double t = full.times(i);
        const auto [aj, as] = analytic_amplitudes(model, t);
        out << format_value(t) << ','
            << format_value(t / full.tau) << ','
            << format_value(full.p_initial(i)) << ','
            << format_value(full.p_searched(i)) << ','
            << format_value(std::norm(aj)) << ','
            << format_value(std::norm(as)) << '\n';
    }
    finish(out, path);
}

void write_scaling_csv(const std::string& path, const ScalingReport& report,
                       const HeaderBlock& header) {
    std::ofstream out = open_out(path);
    write_header(out, header);
    if (report.has_fit) {
        out << "# alpha = " << format_value(report.alpha) << '\n';
        out << "# alpha_omega0_over_pi = " << format_value(report.alpha_omega0_over_pi)
            << '\n';
        out << "# correlation = " << format_value(report.correlation) << '\n';
    }
    out << "n,sqrt_n,t_star,tau,t_star_over_tau,p_star\n";
    for (const ScalingRow& row : report.rows) {
        out << row.set_size << ','
            << format_value(std::sqrt(static_cast<double>(row.set_size))) << ','
            << format_value(row.t_star) << ','
            << format_value(row.tau) << ','
            << format_value(row.t_star_over_tau) << ','
            << format_value(row.p_star) << '\n';
    }
    finish(out, path);
}

void write_histogram_csv(const std::string& path,
                         const std::map<Index64, Index64>& histogram, double omega0,
                         const HeaderBlock& header) {
    std::ofstream out = open_out(path);
    write_header(out, header);
    out << "index_diff,frequency_diff,multiplicity\n";
    for (const auto& [diff, count] : histogram) {
        out << diff << ',' << format_value(omega0 * static_cast<double>(diff)) << ','
            << count << '\n';
    }
    finish(out, path);
}

void write_field_csv(const std::string& path, const WaveField& field,
                     const HeaderBlock& header) {
    std::ofstream out = open_out(path);
    write_header(out, header);
    out << "x,re_psi,im_psi,abs2_psi\n";
    for (Eigen::Index i = 0; i < field.values.size(); ++i) {
        const Complex psi = field.values(i);
        out << format_value(field.grid(i)) << ','
            << format_value(psi.real()) << ','
            << format_value(psi.imag()) << ','
            << format_value(std::norm(psi)) << '\n';
    }
    finish(out, path);
}

}  // namespace wavesearch
