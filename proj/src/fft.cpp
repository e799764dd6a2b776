#include "fft.hpp"

#include <mutex>

namespace whichpath::detail {

namespace {
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}
} // namespace

FftBuffer::FftBuffer(std::size_t n) : data_(n)
{
    auto* raw = reinterpret_cast<fftw_complex*>(data_.data());
    const int len = static_cast<int>(n);
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_1d(len, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(len, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
}

FftBuffer::~FftBuffer()
{
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
}

void FftBuffer::forward() { fftw_execute(forward_); }
void FftBuffer::backward() { fftw_execute(backward_); }

} // namespace whichpath::detail
