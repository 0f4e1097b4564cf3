from setuptools import setup, find_packages

setup(
    name="springeriso",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "typer>=0.9.0",
        "rich>=13.4.2",
        "pydantic>=2.4.0",
        "python-dotenv>=1.0.0",
        "numpy>=1.26.0",
        "sympy>=1.12",
    ],
    entry_points={"console_scripts": ["springeriso=src.cli.__main__:main"]},
)
