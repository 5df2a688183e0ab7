from setuptools import find_packages, setup

with open("README.md") as f:
    long_description = f.read()

setup(
    name="yarts",
    version="0.1.0",
    description="Yet Another Rank-Two Semifield checker",
    author="Alistair Lynn",
    author_email="alynn@studentrobotics.org",
    packages=find_packages(exclude=["tests"]),
    long_description=long_description,
    long_description_content_type="text/markdown",
    zip_safe=True,
    python_requires=">=3.10",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Environment :: Console",
        "License :: CC0 1.0 Universal (CC0 1.0) Public Domain Dedication",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=[
        "galois",
        "numpy",
        "tqdm",
    ],
    entry_points={
        "console_scripts": [
            "yarts = yarts.cli:main",
            "yarts-verify = yarts.verify.cli:main",
        ],
    },
)
