#!/usr/bin/env python3
"""Generate golden hash vectors for the fixture set from reference-semantics
implementations (Pillow/numpy/scipy), independent of the C++ code paths.

Bit layouts follow the project serialization convention (row-major,
most-significant bit first), so the vectors check algorithm agreement rather
than container formatting.

Usage: make_goldens.py <fixtures_dir> <output_tsv>
"""

import math
import sys
from pathlib import Path

import numpy as np
import scipy.fftpack
from PIL import Image


def bits_to_hex(bits, declared_len):
    ndigits = (declared_len + 3) // 4
    value = 0
    for i, b in enumerate(bits):
        if b:
            value |= 1 << (ndigits * 4 - 1 - i)
    return format(value, f"0{ndigits}x")


# ---------------------------------------------------------------- phash

def ref_phash(im):
    img = im.convert("L").resize((32, 32), Image.Resampling.LANCZOS)
    pixels = np.asarray(img)
    dct = scipy.fftpack.dct(scipy.fftpack.dct(pixels, axis=0), axis=1)
    low = dct[:8, :8]
    med = np.median(low)
    return (low > med).flatten()


# ---------------------------------------------------------------- whash

def haar_fwd(mat, levels):
    out = mat.astype(np.float64).copy()
    size = out.shape[0]
    for _ in range(levels):
        top = out[:size, :size]
        rows = np.empty_like(top)
        rows[:, : size // 2] = (top[:, 0::2] + top[:, 1::2]) / math.sqrt(2)
        rows[:, size // 2:] = (top[:, 0::2] - top[:, 1::2]) / math.sqrt(2)
        cols = np.empty_like(rows)
        cols[: size // 2, :] = (rows[0::2, :] + rows[1::2, :]) / math.sqrt(2)
        cols[size // 2:, :] = (rows[0::2, :] - rows[1::2, :]) / math.sqrt(2)
        out[:size, :size] = cols
        size //= 2
    return out


def haar_inv(mat, levels):
    out = mat.astype(np.float64).copy()
    size = out.shape[0] >> levels
    for _ in range(levels):
        size *= 2
        top = out[:size, :size]
        rows = np.empty_like(top)
        rows[0::2, :] = (top[: size // 2, :] + top[size // 2:, :]) / math.sqrt(2)
        rows[1::2, :] = (top[: size // 2, :] - top[size // 2:, :]) / math.sqrt(2)
        cols = np.empty_like(rows)
        cols[:, 0::2] = (rows[:, : size // 2] + rows[:, size // 2:]) / math.sqrt(2)
        cols[:, 1::2] = (rows[:, : size // 2] - rows[:, size // 2:]) / math.sqrt(2)
        out[:size, :size] = cols
    return out


def ref_whash(im):
    # Natural pow2 scale, no cap (reference behaviour); hash_size 8.
    natural = 2 ** int(np.log2(min(im.size)))
    scale = max(natural, 8)
    ll_max = int(np.log2(scale))
    dwt_level = ll_max - 3

    img = im.convert("L").resize((scale, scale), Image.Resampling.LANCZOS)
    pixels = np.asarray(img) / 255.0

    coeffs = haar_fwd(pixels, ll_max)
    coeffs[0, 0] = 0.0
    pixels = haar_inv(coeffs, ll_max)

    low = haar_fwd(pixels, dwt_level)[:8, :8]
    med = np.median(low)
    return (low > med).flatten()


# ---------------------------------------------------------------- colourhash

def ref_colourhash_categories(im):
    intensity = np.asarray(im.convert("L")).flatten()
    h, s, _v = [np.asarray(x).flatten() for x in im.convert("HSV").split()]
    mask_black = intensity < 256 // 8
    frac_black = mask_black.mean()
    mask_gray = s < 256 // 3
    frac_gray = np.logical_and(~mask_black, mask_gray).mean()
    mask_colors = np.logical_and(~mask_black, ~mask_gray)
    mask_faint = np.logical_and(mask_colors, s < 256 * 2 // 3)
    mask_bright = np.logical_and(mask_colors, s > 256 * 2 // 3)
    c = max(1, int(mask_colors.sum()))
    hue_bins = np.linspace(0, 255, 7)
    if mask_faint.any():
        h_faint, _ = np.histogram(h[mask_faint], bins=hue_bins)
    else:
        h_faint = np.zeros(6)
    if mask_bright.any():
        h_bright, _ = np.histogram(h[mask_bright], bins=hue_bins)
    else:
        h_bright = np.zeros(6)

    values = [min(7, int(frac_black * 8)), min(7, int(frac_gray * 8))]
    # layout: black, gray, high-saturation hue bins, low-saturation hue bins
    for counts in list(h_bright) + list(h_faint):
        values.append(min(7, int(counts * 8 / c)))
    return values


def ref_colourhash(im):
    values = ref_colourhash_categories(im)
    bits = []
    for v in values:
        bits += [(v >> 2) & 1, (v >> 1) & 1, v & 1]
    bits += [0, 0]  # pad 42 -> 44
    return bits


# ---------------------------------------------------------------- blockhash

def ref_blockhash(im):
    data = np.asarray(im.convert("RGB"), dtype=np.float64)
    height, width = data.shape[:2]
    value = data.sum(axis=2)
    nbits = 16
    blocks = np.zeros((nbits, nbits))

    bw = width / nbits
    bh = height / nbits

    def axis_weights(dim, block):
        left = np.zeros(dim, dtype=int)
        right = np.zeros(dim, dtype=int)
        wl = np.zeros(dim)
        wr = np.zeros(dim)
        for i in range(dim):
            mod = math.fmod(i + 1, block)
            frac = mod - math.floor(mod)
            wl[i] = 1 - frac
            wr[i] = frac
            if math.floor(mod) > 0 or (i + 1) == dim:
                left[i] = right[i] = int(i // block)
            else:
                left[i] = int(i // block)
                right[i] = int(math.ceil(i / block))
        right = np.minimum(right, nbits - 1)
        left = np.minimum(left, nbits - 1)
        return left, right, wl, wr

    xl, xr, wxl, wxr = axis_weights(width, bw)
    yt, yb, wyt, wyb = axis_weights(height, bh)

    for y in range(height):
        row = value[y]
        np.add.at(blocks[yt[y]], xl, row * (wyt[y] * wxl))
        np.add.at(blocks[yt[y]], xr, row * (wyt[y] * wxr))
        np.add.at(blocks[yb[y]], xl, row * (wyb[y] * wxl))
        np.add.at(blocks[yb[y]], xr, row * (wyb[y] * wxr))

    flat = blocks.flatten()
    bits = np.zeros(256, dtype=int)
    half_block_value = bw * bh * 256 * 3 / 2
    for band in range(4):
        seg = flat[band * 64:(band + 1) * 64]
        m = np.median(seg)
        for j, v in enumerate(seg):
            bits[band * 64 + j] = int(v > m or (abs(v - m) < 1 and m > half_block_value))
    return bits


# ---------------------------------------------------------------- pdq

def jarosz_window(old_dim, new_dim):
    return (old_dim + 2 * new_dim - 1) // (2 * new_dim)


def box1d(arr, window, axis):
    # Sliding mean over [i-(w-h), i+h-1] clipped to range, h = (w+2)//2.
    h = (window + 2) // 2
    lo = window - h   # taps to the left
    hi = h - 1        # taps to the right
    n = arr.shape[axis]
    arr = np.moveaxis(arr, axis, 0)
    cs = np.concatenate([np.zeros((1,) + arr.shape[1:]), np.cumsum(arr, axis=0)])
    idx = np.arange(n)
    left = np.maximum(0, idx - lo)
    right = np.minimum(n - 1, idx + hi)
    sums = cs[right + 1] - cs[left]
    counts = (right - left + 1).reshape((-1,) + (1,) * (arr.ndim - 1))
    return np.moveaxis(sums / counts, 0, axis)


def ref_pdq(im):
    rgb = np.asarray(im.convert("RGB"), dtype=np.float64)
    luma = 0.299 * rgb[:, :, 0] + 0.587 * rgb[:, :, 1] + 0.114 * rgb[:, :, 2]
    rows, cols = luma.shape

    if (rows, cols) != (64, 64):
        wr = jarosz_window(cols, 64)
        wc = jarosz_window(rows, 64)
        buf = luma
        for _ in range(2):
            buf = box1d(buf, wr, axis=1)
            buf = box1d(buf, wc, axis=0)
        ini = ((np.arange(64) + 0.5) * rows / 64).astype(int)
        inj = ((np.arange(64) + 0.5) * cols / 64).astype(int)
        down = buf[np.ix_(ini, inj)]
    else:
        down = luma

    scale = math.sqrt(2.0 / 64.0)
    d = scale * np.cos(
        (math.pi / 2 / 64) * np.outer(np.arange(1, 17), 2 * np.arange(64) + 1))
    b = d @ down @ d.T
    flat = b.flatten()
    med = np.partition(flat, 127)[127]  # lower median, as the reference selects
    return (flat > med).astype(int)


# ----------------------------------------------------------------

def main():
    fixtures = Path(sys.argv[1])
    out_path = Path(sys.argv[2])

    files = sorted(p for p in fixtures.iterdir()
                   if p.suffix.lower() in (".png", ".jpg", ".jpeg"))
    lines = ["#file\talgo\tbitlen\thex"]
    for path in files:
        im = Image.open(path).convert("RGB")
        lines.append(f"{path.name}\tblockhash\t256\t{bits_to_hex(ref_blockhash(im), 256)}")
        lines.append(f"{path.name}\tcolourhash\t44\t{bits_to_hex(ref_colourhash(im), 44)}")
        lines.append(f"{path.name}\tpdq\t256\t{bits_to_hex(ref_pdq(im), 256)}")
        lines.append(f"{path.name}\tphash\t64\t{bits_to_hex(ref_phash(im), 64)}")
        lines.append(f"{path.name}\twavehash\t64\t{bits_to_hex(ref_whash(im), 64)}")
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} golden vectors for {len(files)} fixtures")


if __name__ == "__main__":
    main()
