#include "fracsde/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fracsde {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string path_csv(const NoisePath& p) {
    std::ostringstream os;
    os << "t,value\n";
    for (int i = 0; i <= p.grid.n; ++i)
        os << format_g17(p.grid.point(i)) << ',' << format_g17(p.values[i]) << '\n';
    return os.str();
}

std::string matrix_csv(const TimeGrid& grid, const Eigen::MatrixXd& values) {
    std::ostringstream os;
    os << "t";
    for (int j = 0; j < values.cols(); ++j) os << ",coord_" << j;
    os << '\n';
    for (int i = 0; i <= grid.n && i < values.rows(); ++i) {
        os << format_g17(grid.point(i));
        for (int j = 0; j < values.cols(); ++j) os << ',' << format_g17(values(i, j));
        os << '\n';
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot open output file: " + path);
    f << content;
    if (!f) throw config_error("failed writing: " + path);
}

} // namespace fracsde
