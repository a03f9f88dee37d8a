"""Energy-decoherence dynamics of closed oscillator/spin systems."""

__version__ = "0.1.0"
