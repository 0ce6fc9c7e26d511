from setuptools import find_namespace_packages, setup

# Aggregate manifest for the three sub-packages so the repository root can be installed directly.
# Metadata and dependencies mirror kbal_core/setup.cfg, kbal_hpc/setup.cfg and kbal_cli/setup.cfg.
SUBPACKAGES = ("kbal_core", "kbal_hpc", "kbal_cli")

packages = []
package_dir = {}
for root in SUBPACKAGES:
    for name in find_namespace_packages(where=root, include=["kbal.*"]):
        packages.append(name)
        package_dir[name] = root + "/" + name.replace(".", "/")

if __name__ == "__main__":
    setup(
        name="kbal",
        version="1.0.0",
        description="kbal: kernel balancing weights and retargeted mean estimators",
        packages=packages,
        package_dir=package_dir,
        python_requires=">=3.8",
        install_requires=[
            "numpy",
            "scipy",
            "pandas>=1.5",
            "xlsxwriter",
            "pyyaml",
            "concurrent-log-handler",
            "termcolor",
        ],
        extras_require={"dev": ["pytest", "pre-commit"]},
        entry_points={"console_scripts": ["kbal = kbal.cli.main:main"]},
    )
