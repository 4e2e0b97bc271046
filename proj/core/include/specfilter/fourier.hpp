#pragma once

#include <memory>
#include <vector>

#include "specfilter/common.hpp"
#include "specfilter/state.hpp"

namespace specfilter {

/// Unitary DFT of a fixed size, backed by FFTW. Plans are created once at
/// construction (plan creation is serialized internally); execution is
/// const and safe to call concurrently on distinct buffers.
///
/// Convention: forward_k = (1/sqrt(N)) sum_j in_j e^{-2 pi i jk/N}, inverse
/// is the adjoint, so norms are preserved in both directions.
class FourierTransformer {
  public:
    explicit FourierTransformer(int size);
    ~FourierTransformer();

    FourierTransformer(const FourierTransformer&) = delete;
    FourierTransformer& operator=(const FourierTransformer&) = delete;
    FourierTransformer(FourierTransformer&&) noexcept;
    FourierTransformer& operator=(FourierTransformer&&) noexcept;

    int size() const { return size_; }

    void forward(const cplx* in, cplx* out) const;
    void inverse(const cplx* in, cplx* out) const;

    std::vector<cplx> forward(const std::vector<cplx>& in) const;
    std::vector<cplx> inverse(const std::vector<cplx>& in) const;

  private:
    int size_;
    void* plan_forward_;
    void* plan_inverse_;
};

/// Unitary DFT of the amplitudes; bin k of the result pairs with the grid
/// momentum grid.momentum(k). Convenience wrappers that build a one-shot plan.
StateVector dft_forward(const StateVector& s);
StateVector dft_inverse(const StateVector& s);

}  // namespace specfilter
