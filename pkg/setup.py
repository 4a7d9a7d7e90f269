from setuptools import setup

setup(
    name='strengthlab',
)
