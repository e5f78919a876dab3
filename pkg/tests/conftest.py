import numpy as np
import pytest

from rocktex.image import ColorImage, ColorSpace

DATA_DIR = __file__.rsplit("/", 1)[0] + "/data"


def _criterion_line(name: str) -> str:
    """``test_criterion_2a_per_class_...`` -> ``criterion 2a: per class ...``."""
    rest = name[len("test_criterion_"):]
    tag, _, slug = rest.partition("_")
    return f"criterion {tag}: {slug.replace('_', ' ')}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    results = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            # a failure in any phase outranks a pass record for the same test
            if key != "passed" or name not in results:
                results[name] = "PASS" if key == "passed" else "FAIL"
    if results:
        terminalreporter.section("acceptance criteria")
        for name in sorted(results):
            terminalreporter.write_line(f"{results[name]}  {_criterion_line(name)}")


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def random_rgb_image(rng, height=32, width=32, pin_range=False):
    """Random uint8 image; ``pin_range`` plants a black and a white pixel so
    every channel plane spans the full [0, 255] range."""
    px = rng.integers(0, 256, (height, width, 3), dtype=np.uint8)
    if pin_range:
        px[0, 0] = (0, 0, 0)
        px[-1, -1] = (255, 255, 255)
    return ColorImage(px, ColorSpace.RGB)


@pytest.fixture
def fixture_confusion():
    """The bundled 8-class reference confusion matrix and its class names."""
    from rocktex.corpus import read_matrix_csv
    matrix, row_labels, col_labels = read_matrix_csv(DATA_DIR + "/reference_confusion.csv")
    assert row_labels == col_labels
    return matrix, row_labels
