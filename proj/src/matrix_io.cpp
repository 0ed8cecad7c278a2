// entwit: bipartite entanglement-detection toolkit
// matrix_io.cpp — text matrix-file reader/writer.

#include "entwit/matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace entwit {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line_no, const std::string& detail) {
    std::ostringstream msg;
    msg << name << ":" << line_no << ": " << detail;
    throw ParseError(msg.str());
}

} // namespace

MatrixFile read_matrix_stream(std::istream& in, const std::string& name) {
    MatrixFile mf;
    bool have_dims = false;
    bool comment_block_done = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // Trim trailing carriage return from files written on other platforms.
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!comment_block_done) {
                std::string piece = line.substr(1);
                if (!piece.empty() && piece[0] == ' ') piece.erase(0, 1);
                if (!mf.comment.empty()) mf.comment += '\n';
                mf.comment += piece;
            }
            continue;
        }
        std::istringstream fields(line);
        if (!have_dims) {
            comment_block_done = true;
            std::string tag;
            int m = 0, n = 0;
            if (!(fields >> tag >> m >> n) || tag != "dims")
                parse_fail(name, line_no, "expected header \"dims m n\", got \"" + line + "\"");
            if (m < 1 || n < 1)
                parse_fail(name, line_no, "dims must be positive");
            mf.dims = {m, n};
            mf.mat = Matrix::Zero(mf.dims.total(), mf.dims.total());
            have_dims = true;
            continue;
        }
        comment_block_done = true;
        int row = 0, col = 0;
        double re = 0.0, im = 0.0;
        if (!(fields >> row >> col >> re >> im))
            parse_fail(name, line_no, "expected \"row col re im\", got \"" + line + "\"");
        if (row < 0 || col < 0 || row >= mf.dims.total() || col >= mf.dims.total())
            parse_fail(name, line_no,
                       "index (" + std::to_string(row) + ", " + std::to_string(col) +
                           ") out of range for a " + std::to_string(mf.dims.total()) +
                           "-dimensional matrix");
        mf.mat(row, col) = Complex(re, im);
    }
    if (!have_dims) parse_fail(name, line_no, "missing \"dims m n\" header");
    return mf;
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_matrix_stream(in, path);
}

void write_matrix_stream(std::ostream& out, const Matrix& mat, BipartiteDims dims,
                         const std::string& comment) {
    require_bipartite(mat, dims, "write_matrix_stream");
    if (!comment.empty()) {
        std::istringstream pieces(comment);
        std::string piece;
        while (std::getline(pieces, piece)) out << "# " << piece << '\n';
    }
    out << "dims " << dims.m << ' ' << dims.n << '\n';
    out << std::setprecision(17);  // round-trip exact for binary64
    for (int i = 0; i < mat.rows(); ++i)
        for (int j = 0; j < mat.cols(); ++j)
            out << i << ' ' << j << ' ' << mat(i, j).real() << ' ' << mat(i, j).imag()
                << '\n';
}

void write_matrix_file(const std::string& path, const Matrix& mat, BipartiteDims dims,
                       const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open file for writing");
    write_matrix_stream(out, mat, dims, comment);
    if (!out) throw Error(path + ": write failed");
}

void validate_kind(const MatrixFile& mf, const std::string& kind) {
    if (kind == "density") {
        validate_density({mf.mat, mf.dims}, "matrix file");
    } else if (kind == "witness") {
        require_bipartite(mf.mat, mf.dims, "matrix file");
        const double defect = hermiticity_defect(mf.mat);
        if (defect > 1e-10) {
            std::ostringstream msg;
            msg << "matrix file: witness not Hermitian (relative defect " << defect
                << " exceeds 1e-10)";
            throw InvariantError(msg.str());
        }
    } else {
        throw ParameterError("validate_kind: kind must be \"density\" or \"witness\", got \"" +
                             kind + "\"");
    }
}

} // namespace entwit
