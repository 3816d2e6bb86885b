"""Univalence certificates for meromorphic functions on the unit disk with one simple pole."""

from .certify import (CertificateResult, CertifyConfig, Verdict, certify_nth, certify_second_derivative,
                      certify_thmB, certify_vp, coefficient_tests, mu, onset_radius, sup_modulus)
from .coeffs import (a2_region_check, a2_scan, bn_report, bn_scan, conjecture_bound, conjecture_scan,
                     sample_members)
from .descriptor import load_descriptor, parse_descriptor, to_descriptor
from .errors import ModelError
from .gallery import GALLERY, build, verify_gallery
from .model import (MeroFunction, SchwarzSampler, derivative_series, exterior_transform_check, from_rational,
                    from_schwarz, from_z_over_f, taylor_of_f, u_operator, z_over_f)
from .oracle import OracleConfig, critical_points, injectivity_scan
from .series import PowerSeries, Tail

__version__ = "0.1.0"
