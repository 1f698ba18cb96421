"""
测试模块

包含极值晶体实验室的所有测试用例。
"""
