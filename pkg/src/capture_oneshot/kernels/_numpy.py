"""Pure-numpy kernel backend.

Reference implementations of the kernel contracts. Convolutions are
expressed as nine shifted matmuls on padded views, which keeps the code
close to the defining sums; the numba backend is the fast path.
"""

from __future__ import annotations

import numpy as np


def _pad1(x: np.ndarray) -> np.ndarray:
    return np.pad(x, ((0, 0), (1, 1), (1, 1), (0, 0)))


def conv3x3(x: np.ndarray, w: np.ndarray, b: np.ndarray) -> np.ndarray:
    """3x3 stride-1 convolution with zero padding 1.

    x: (B, H, W, Cin), w: (3, 3, Cin, Cout), b: (Cout,). Returns
    (B, H, W, Cout) in the dtype of x.
    """
    B, H, W, _ = x.shape
    xp = _pad1(x)
    out = np.zeros((B, H, W, w.shape[3]), dtype=x.dtype)
    for dy in range(3):
        for dx in range(3):
            out += xp[:, dy : dy + H, dx : dx + W, :] @ w[dy, dx]
    out += b
    return out


def conv3x3_grad_input(g: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Gradient of conv3x3 w.r.t. its input. g: (B, H, W, Cout)."""
    B, H, W, _ = g.shape
    Cin = w.shape[2]
    gxp = np.zeros((B, H + 2, W + 2, Cin), dtype=g.dtype)
    for dy in range(3):
        for dx in range(3):
            gxp[:, dy : dy + H, dx : dx + W, :] += g @ w[dy, dx].T
    return np.ascontiguousarray(gxp[:, 1 : H + 1, 1 : W + 1, :])


def conv3x3_grad_weight(x: np.ndarray, g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Gradients of conv3x3 w.r.t. weights and bias."""
    B, H, W, Cin = x.shape
    Cout = g.shape[3]
    xp = _pad1(x)
    gw = np.zeros((3, 3, Cin, Cout), dtype=x.dtype)
    for dy in range(3):
        for dx in range(3):
            gw[dy, dx] = np.tensordot(
                xp[:, dy : dy + H, dx : dx + W, :], g, axes=([0, 1, 2], [0, 1, 2])
            )
    gb = g.sum(axis=(0, 1, 2))
    return gw, gb


def maxpool2(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """2x2 max pooling. Returns (pooled, argmax) with argmax in {0..3}.

    The argmax encodes 2*dy + dx of the winning cell; ties go to the
    lowest index, matching np.argmax.
    """
    B, H, W, C = x.shape
    Ho, Wo = H // 2, W // 2
    r = x.reshape(B, Ho, 2, Wo, 2, C)
    stack = r.transpose(0, 1, 3, 5, 2, 4).reshape(B, Ho, Wo, C, 4)
    idx = stack.argmax(axis=-1).astype(np.int8)
    out = np.take_along_axis(stack, idx[..., None].astype(np.int64), axis=-1)[..., 0]
    return np.ascontiguousarray(out), idx


def maxpool2_grad(g: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Scatter pooled gradients back to the argmax positions."""
    B, Ho, Wo, C = g.shape
    stack = np.zeros((B, Ho, Wo, C, 4), dtype=g.dtype)
    np.put_along_axis(stack, idx[..., None].astype(np.int64), g[..., None], axis=-1)
    gx = stack.reshape(B, Ho, Wo, C, 2, 2).transpose(0, 1, 4, 2, 5, 3)
    return np.ascontiguousarray(gx.reshape(B, Ho * 2, Wo * 2, C))


def leaky_relu(z: np.ndarray, slope: float) -> np.ndarray:
    s = z.dtype.type(slope)
    return np.where(z > 0, z, s * z)


def leaky_relu_grad(g: np.ndarray, z: np.ndarray, slope: float) -> np.ndarray:
    s = g.dtype.type(slope)
    return np.where(z > 0, g, s * g)


def conv2d_replicate(img: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """2-D convolution of an (H, W, C) image with edge-replicate padding.

    Accumulates in float64 regardless of image dtype so that normalized
    kernels keep constant images fixed to within float32 rounding.
    """
    kh, kw = kernel.shape
    py, px = kh // 2, kw // 2
    flipped = kernel[::-1, ::-1].astype(np.float64)  # correlate with the flip = convolve
    padded = np.pad(img.astype(np.float64), ((py, py), (px, px), (0, 0)), mode="edge")
    win = np.lib.stride_tricks.sliding_window_view(padded, (kh, kw), axis=(0, 1))
    out = np.einsum("hwckl,kl->hwc", win, flipped)
    return out.astype(img.dtype)
