from .grid import TimeGrid, GridSeries
from .special import MLParams, mittag_leffler, gamma, rgamma
from .kernel import (
    Kernel, PowerKernel, convolve, convolve_kernels, convolution_derivative)
from .operators import (
    rl_integral, rl_integral_left, caputo_derivative, rl_derivative,
    caputo_derivative_left, rl_derivative_left,
    integration_by_parts_residual, derivative_by_parts_residual,
    weak_derivative_residual, convexity_defect, l1_matrix)
