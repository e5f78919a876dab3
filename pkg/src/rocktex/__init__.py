"""Color rock-texture descriptors and classification.

Cross-color-space LBP fusion over raw intensities, Gabor amplitude
planes, or low-frequency DCT reconstructions, with histogram similarity
metrics and a leave-one-out evaluation pipeline.
"""

from .albpcsf import CHANNEL_PAIRS, FusedDescriptor, albpcsf, cross_channel_lbp, fuse_planes
from .dct import dct2, idct2, lowpass
from .descriptors import (DescriptorRecord, Method, PairStats, albpcsf_descriptor,
                          d_albpcsf, g_albpcsf, lbp_descriptor, pair_stats, rgb_hist)
from .evaluation import (BinaryTallies, ClassifierMetrics, ClassReport, LabeledCorpus,
                         binary_tallies, classify, confusion, metrics, per_class_report)
from .gabor import GaborKernel, GaborParams, GaborResponse, bank, build_kernel, filter_plane
from .image import (Channel, ColorImage, ColorSpace, extract_plane, hsv_to_rgb,
                    normalize_plane, rgb_to_hsv)
from .lbp import LbpConfig, LbpVariant, histogram, lbp_code, lbp_map, ri_code, riu2_code
from .similarity import Metric, SimilarityScore, chi_square, distance, hist_intersection

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
