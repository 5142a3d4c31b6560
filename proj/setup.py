import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Drives the project's CMake build and drops the module into the package."""

    def build_extension(self, ext):
        out_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_zeta_asym", "-j"],
            check=True,
        )

        built = list((build_dir / "python" / "zeta_asym").glob("_zeta_asym*.so"))
        if not built:
            raise RuntimeError("pybind11 module was not produced by the CMake build")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], out_path)


setup(
    ext_modules=[CMakeExtension("zeta_asym._zeta_asym")],
    cmdclass={"build_ext": CMakeBuild},
)
