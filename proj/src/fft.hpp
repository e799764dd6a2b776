#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <fftw3.h>

namespace whichpath::detail {

/// In-place unnormalized forward/backward DFT pair over an owned buffer.
/// Plan creation is serialized internally; execution is thread safe.
class FftBuffer {
public:
    explicit FftBuffer(std::size_t n);
    ~FftBuffer();
    FftBuffer(const FftBuffer&) = delete;
    FftBuffer& operator=(const FftBuffer&) = delete;

    std::span<std::complex<double>> data() { return data_; }
    void forward();
    void backward();

private:
    std::vector<std::complex<double>> data_;
    fftw_plan forward_ = nullptr;
    fftw_plan backward_ = nullptr;
};

} // namespace whichpath::detail
