"""NIE 常循环码工具箱"""
