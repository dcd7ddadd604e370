"""One-shot splash-screen classification toolkit.

Trains a small convolutional classifier from a single clean image per
class by simulating camera-capture conditions (perspective, blur, glare,
noise, ...) and rejects out-of-distribution inputs via Monte Carlo
dropout uncertainty.
"""

__version__ = "0.1.0"
