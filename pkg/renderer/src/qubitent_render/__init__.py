"""Image renderer for the qubitent figure datasets.

Pure presentation: the renderer consumes the CSV contract of the compute
package (fig1..fig5 schemas) and never calls the compute core.
"""

__version__ = "0.1.0"

from .render import FigureData, RenderJob, SchemaError, build_figure, load_dataset, render

__all__ = [
    "__version__",
    "FigureData",
    "RenderJob",
    "SchemaError",
    "build_figure",
    "load_dataset",
    "render",
]
