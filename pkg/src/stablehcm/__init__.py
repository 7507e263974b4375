"""Positive stable densities, the slit-plane function G and numerical HCM checks."""
