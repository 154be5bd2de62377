//! In-place radix-2 FFT for the spectral test.
//!
//! The DFT statistic only needs power-of-two lengths (8192 bits per unit
//! block), so a plain iterative Cooley–Tukey implementation is sufficient
//! and keeps the numeric path fully deterministic.

use std::f64::consts::PI;

/// In-place forward DFT of the complex signal (re, im).
/// Length must be a power of two.
pub fn fft_in_place(re: &mut [f64], im: &mut [f64]) {
    let n = re.len();
    assert_eq!(n, im.len(), "re/im length mismatch");
    assert!(n.is_power_of_two(), "fft length must be a power of two");
    if n <= 1 {
        return;
    }

    // Bit-reversal permutation.
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            re.swap(i, j);
            im.swap(i, j);
        }
    }

    // Butterflies.
    let mut len = 2;
    while len <= n {
        let ang = -2.0 * PI / len as f64;
        let (w_im, w_re) = ang.sin_cos();
        for start in (0..n).step_by(len) {
            let mut cur_re = 1.0;
            let mut cur_im = 0.0;
            for k in 0..len / 2 {
                let a = start + k;
                let b = a + len / 2;
                let t_re = cur_re * re[b] - cur_im * im[b];
                let t_im = cur_re * im[b] + cur_im * re[b];
                re[b] = re[a] - t_re;
                im[b] = im[a] - t_im;
                re[a] += t_re;
                im[a] += t_im;
                let next_re = cur_re * w_re - cur_im * w_im;
                cur_im = cur_re * w_im + cur_im * w_re;
                cur_re = next_re;
            }
        }
        len <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::DetRng;

    /// O(n²) reference DFT.
    fn naive_dft(re: &[f64], im: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let n = re.len();
        let mut out_re = vec![0.0; n];
        let mut out_im = vec![0.0; n];
        for (k, (or, oi)) in out_re.iter_mut().zip(out_im.iter_mut()).enumerate() {
            for t in 0..n {
                let ang = -2.0 * PI * (k * t) as f64 / n as f64;
                let (s, c) = ang.sin_cos();
                *or += re[t] * c - im[t] * s;
                *oi += re[t] * s + im[t] * c;
            }
        }
        (out_re, out_im)
    }

    #[test]
    fn matches_naive_dft_on_random_signals() {
        let mut rng = DetRng::new(&[42u8; 32], "fft-test");
        for &n in &[2usize, 16, 64, 256] {
            let re: Vec<f64> = (0..n).map(|_| rng.f64_unit() * 2.0 - 1.0).collect();
            let im: Vec<f64> = (0..n).map(|_| rng.f64_unit() * 2.0 - 1.0).collect();
            let (want_re, want_im) = naive_dft(&re, &im);
            let mut got_re = re.clone();
            let mut got_im = im.clone();
            fft_in_place(&mut got_re, &mut got_im);
            for k in 0..n {
                assert!(
                    (got_re[k] - want_re[k]).abs() < 1e-9 * (n as f64),
                    "re[{k}] at n={n}: {} vs {}",
                    got_re[k],
                    want_re[k]
                );
                assert!(
                    (got_im[k] - want_im[k]).abs() < 1e-9 * (n as f64),
                    "im[{k}] at n={n}: {} vs {}",
                    got_im[k],
                    want_im[k]
                );
            }
        }
    }

    #[test]
    fn impulse_transforms_to_flat_spectrum() {
        let n = 32;
        let mut re = vec![0.0; n];
        let mut im = vec![0.0; n];
        re[0] = 1.0;
        fft_in_place(&mut re, &mut im);
        for k in 0..n {
            assert!((re[k] - 1.0).abs() < 1e-12);
            assert!(im[k].abs() < 1e-12);
        }
    }

    #[test]
    fn constant_transforms_to_dc_spike() {
        let n = 64;
        let mut re = vec![1.0; n];
        let mut im = vec![0.0; n];
        fft_in_place(&mut re, &mut im);
        assert!((re[0] - n as f64).abs() < 1e-9);
        for k in 1..n {
            assert!(re[k].abs() < 1e-9 && im[k].abs() < 1e-9, "bin {k} not zero");
        }
    }

    #[test]
    fn parseval_energy_is_preserved() {
        let mut rng = DetRng::new(&[1u8; 32], "parseval");
        let n = 1024;
        let re: Vec<f64> = (0..n).map(|_| rng.f64_unit() * 2.0 - 1.0).collect();
        let im = vec![0.0; n];
        let time_energy: f64 = re.iter().map(|x| x * x).sum();
        let mut fre = re.clone();
        let mut fim = im.clone();
        fft_in_place(&mut fre, &mut fim);
        let freq_energy: f64 =
            fre.iter().zip(&fim).map(|(r, i)| r * r + i * i).sum::<f64>() / n as f64;
        assert!((time_energy - freq_energy).abs() < 1e-8 * time_energy);
    }
}
