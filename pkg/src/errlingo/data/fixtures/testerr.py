print("bonjour")
1 + "2"
