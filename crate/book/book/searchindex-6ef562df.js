window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#text-formats","masks-to-polynomials.html#from-masks-to-polynomials","masks-to-polynomials.html#computing-the-polynomial","polynomials-to-masks.html#from-polynomials-to-masks","polynomials-to-masks.html#other-supports","equivalent-masks.html#equivalent-masks","equivalent-masks.html#reduction","calculus.html#derivatives-antiderivatives-and-products","calculus.html#derivatives","calculus.html#antiderivatives","calculus.html#products-of-masks","cascade.html#the-cascade-algorithm","cli.html#command-line"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":2.0},"7":{"tf":1.4142135623730951}},"df":5,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"3":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},".":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"8":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},":":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0},"6":{"tf":1.0}},"df":2,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"3":{"tf":1.0}},"df":1,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{"2":{"tf":1.0}},"df":1},"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.7320508075688772},"3":{"tf":1.0}},"df":4,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}},"1":{"docs":{"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"11":{"tf":2.0},"12":{"tf":2.0},"13":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":2.449489742783178},"6":{"tf":2.449489742783178},"7":{"tf":1.0}},"df":11,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}}},")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":2}}}}}},",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.0}},"df":3},"4":{"docs":{"13":{"tf":1.0}},"df":1,",":{"docs":{},"df":0,"9":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1},"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"2":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":2.0},"12":{"tf":2.0},"13":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":10,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},".":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"8":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},":":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"5":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}},"/":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"4":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{"9":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2},"·":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0}},"df":1}},"ⁿ":{"docs":{},"df":0,"·":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}},"3":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.0}},"df":3,",":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0},"13":{"tf":2.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":4,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}},"2":{"docs":{"9":{"tf":1.0}},"df":1},"3":{"docs":{"6":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1,",":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0}},"df":1,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}},"2":{"docs":{"1":{"tf":1.0}},"df":1}}},"4":{"docs":{"13":{"tf":1.0}},"df":1},"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{"1":{"tf":1.0}},"df":1}},"4":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2,"0":{"docs":{"12":{"tf":1.0}},"df":1},"3":{"docs":{"13":{"tf":1.0}},"df":1}},"5":{"docs":{"12":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":8},"4":{"docs":{"10":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"7":{"docs":{"4":{"tf":1.0}},"df":1},"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"9":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,"4":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"9":{"docs":{},"df":0,"4":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"j":{"docs":{"0":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11}}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":2.0},"8":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"!":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}},"m":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{"10":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"q":{"docs":{"4":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"b":{"docs":{"11":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{"2":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"2":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"c":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"13":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.7320508075688772}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":2.449489742783178},"3":{"tf":1.4142135623730951}},"df":2}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2},"s":{"docs":{"2":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"d":{"docs":{"9":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":7}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"4":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.7320508075688772},"13":{"tf":1.0}},"df":2}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"13":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.7320508075688772}},"df":1,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1},"1":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"w":{"docs":{"5":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"d":{"docs":{"12":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"x":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{"10":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"v":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"5":{"tf":1.0}},"df":1,"r":{"docs":{"3":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":2.0},"13":{"tf":1.7320508075688772}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"j":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"4":{"tf":1.0}},"df":4},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1},"v":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":9,"_":{"docs":{"1":{"tf":1.0}},"df":1,"0":{"docs":{"1":{"tf":1.0}},"df":1},"3":{"docs":{"1":{"tf":1.0}},"df":1},"j":{"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"13":{"tf":1.0},"2":{"tf":1.7320508075688772}},"df":4}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11}},"k":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"p":{"docs":{"1":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"10":{"tf":2.23606797749979},"11":{"tf":1.7320508075688772},"12":{"tf":2.23606797749979},"13":{"tf":2.449489742783178},"2":{"tf":2.6457513110645907},"3":{"tf":3.0},"4":{"tf":1.7320508075688772},"6":{"tf":2.6457513110645907},"7":{"tf":2.449489742783178},"9":{"tf":1.0}},"df":12,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"x":{"docs":{"13":{"tf":1.7320508075688772}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,"u":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"n":{"docs":{"12":{"tf":1.7320508075688772},"2":{"tf":2.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":7,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"×":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}},"g":{"docs":{"13":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"w":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":12},"n":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":7,"c":{"docs":{"9":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"12":{"tf":1.4142135623730951}},"df":2}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":2.8284271247461903},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":7,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{"13":{"tf":1.0},"4":{"tf":2.0}},"df":2}},".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2},"t":{"docs":{"13":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"j":{"docs":{"13":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951}},"df":2},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"10":{"tf":1.4142135623730951},"11":{"tf":2.23606797749979},"12":{"tf":2.23606797749979},"13":{"tf":1.4142135623730951},"2":{"tf":2.23606797749979},"3":{"tf":1.7320508075688772},"4":{"tf":2.8284271247461903},"5":{"tf":1.4142135623730951},"6":{"tf":2.23606797749979},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":13,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}},"q":{"docs":{"11":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.7320508075688772}},"df":1}}}}}}}},"r":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"i":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0},"12":{"tf":1.7320508075688772}},"df":2},"2":{"docs":{"12":{"tf":1.0}},"df":1},"3":{"docs":{"12":{"tf":1.0}},"df":1}},"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0}},"df":3}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"4":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":2.0},"13":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"9":{"tf":2.0}},"df":11,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"13":{"tf":3.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1,"d":{"docs":{"7":{"tf":2.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0}},"df":1}},"n":{"docs":{"7":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":5},"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"2":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3}},"g":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"z":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":2.23606797749979},"13":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"y":{"docs":{"12":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951}},"df":2}},"o":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":5},"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":2.0},"2":{"tf":1.0}},"df":6,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}},"l":{"docs":{"12":{"tf":1.7320508075688772}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}}}}}}},"p":{"docs":{"4":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":7}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}},"u":{"docs":{"4":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"p":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"12":{"tf":2.0},"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":12,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"v":{"docs":{"6":{"tf":2.0},"7":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}},"<":{"docs":{},"df":0,"_":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"y":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}}}}},"z":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":2.0},"7":{"tf":1.4142135623730951}},"df":5,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}}}},"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,".":{"docs":{},"df":0,"3":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},".":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"8":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},":":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0},"6":{"tf":1.0}},"df":2,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"3":{"tf":1.0}},"df":1,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{"2":{"tf":1.0}},"df":1},"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"3":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.7320508075688772},"3":{"tf":1.0}},"df":4,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}},"1":{"docs":{"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"11":{"tf":2.0},"12":{"tf":2.0},"13":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":2.449489742783178},"6":{"tf":2.449489742783178},"7":{"tf":1.0}},"df":11,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2}}}}}},")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":2}}}}}},",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.0}},"df":3},"4":{"docs":{"13":{"tf":1.0}},"df":1,",":{"docs":{},"df":0,"9":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1},"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"2":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":2.0},"12":{"tf":2.0},"13":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":10,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},".":{"docs":{},"df":0,"5":{"docs":{"13":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"8":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},":":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"5":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}},"/":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"4":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{"9":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2},"·":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0}},"df":1}},"ⁿ":{"docs":{},"df":0,"·":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}},"3":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.0}},"df":3,",":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0},"13":{"tf":2.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":4,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}},"2":{"docs":{"9":{"tf":1.0}},"df":1},"3":{"docs":{"6":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1,",":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0}},"df":1,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}},"2":{"docs":{"1":{"tf":1.0}},"df":1}}},"4":{"docs":{"13":{"tf":1.0}},"df":1},"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"8":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{"1":{"tf":1.0}},"df":1}},"4":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2,"0":{"docs":{"12":{"tf":1.0}},"df":1},"3":{"docs":{"13":{"tf":1.0}},"df":1}},"5":{"docs":{"12":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":8},"4":{"docs":{"10":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"7":{"docs":{"4":{"tf":1.0}},"df":1},"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"9":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,"4":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"9":{"docs":{},"df":0,"4":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"j":{"docs":{"0":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.7320508075688772}},"df":1}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11}}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":2.449489742783178},"11":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"!":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}},"m":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{"10":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"q":{"docs":{"4":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"b":{"docs":{"11":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{"2":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"2":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"c":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.7320508075688772}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.7320508075688772}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":2.449489742783178},"3":{"tf":1.4142135623730951}},"df":2}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2},"s":{"docs":{"2":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"d":{"docs":{"9":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":7}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.7320508075688772}},"df":5}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"4":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.7320508075688772},"13":{"tf":1.0}},"df":2}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"13":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.7320508075688772}},"df":1,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1},"1":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"w":{"docs":{"5":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"d":{"docs":{"12":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"x":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"3":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.7320508075688772},"13":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{"10":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"v":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"5":{"tf":1.0}},"df":1,"r":{"docs":{"3":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0}},"df":2}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":2.0},"13":{"tf":1.7320508075688772}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"j":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"4":{"tf":1.0}},"df":4},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1},"v":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"13":{"tf":1.7320508075688772}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":9,"_":{"docs":{"1":{"tf":1.0}},"df":1,"0":{"docs":{"1":{"tf":1.0}},"df":1},"3":{"docs":{"1":{"tf":1.0}},"df":1},"j":{"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"13":{"tf":1.0},"2":{"tf":1.7320508075688772}},"df":4}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11}},"k":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"p":{"docs":{"1":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"10":{"tf":2.23606797749979},"11":{"tf":2.0},"12":{"tf":2.23606797749979},"13":{"tf":2.449489742783178},"2":{"tf":3.0},"3":{"tf":3.1622776601683795},"4":{"tf":2.23606797749979},"5":{"tf":1.0},"6":{"tf":3.0},"7":{"tf":2.6457513110645907},"9":{"tf":1.0}},"df":13,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"x":{"docs":{"13":{"tf":1.7320508075688772}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,"u":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"n":{"docs":{"12":{"tf":1.7320508075688772},"2":{"tf":2.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":7,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"×":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}},"g":{"docs":{"13":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"w":{"docs":{"3":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":12},"n":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":7,"c":{"docs":{"9":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"12":{"tf":1.4142135623730951}},"df":2}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":2.8284271247461903},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":7,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{"13":{"tf":1.0},"4":{"tf":2.0}},"df":2}},".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2},"t":{"docs":{"13":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"j":{"docs":{"13":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951}},"df":2},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"10":{"tf":1.4142135623730951},"11":{"tf":2.23606797749979},"12":{"tf":2.23606797749979},"13":{"tf":1.4142135623730951},"2":{"tf":2.6457513110645907},"3":{"tf":2.23606797749979},"4":{"tf":3.1622776601683795},"5":{"tf":1.7320508075688772},"6":{"tf":2.23606797749979},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":13,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1},"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"4":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5}}}}}}},"q":{"docs":{"11":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.7320508075688772}},"df":1}}}}}}}},"r":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"i":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0},"12":{"tf":1.7320508075688772}},"df":2},"2":{"docs":{"12":{"tf":1.0}},"df":1},"3":{"docs":{"12":{"tf":1.0}},"df":1}},"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0}},"df":3}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"4":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":2.0},"13":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"9":{"tf":2.0}},"df":11,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"0":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"13":{"tf":3.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":11}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1,"d":{"docs":{"7":{"tf":2.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0}},"df":1}},"n":{"docs":{"7":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":5},"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"2":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3}},"g":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"z":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":2.23606797749979},"13":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"y":{"docs":{"12":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951}},"df":2}},"o":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":5},"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":2.0},"2":{"tf":1.0}},"df":6,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}},"l":{"docs":{"12":{"tf":1.7320508075688772}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}}}}}}},"p":{"docs":{"4":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":7}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}},"u":{"docs":{"4":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"p":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"12":{"tf":2.0},"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":12,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"v":{"docs":{"6":{"tf":2.0},"7":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}},"<":{"docs":{},"df":0,"_":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"y":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}}}}},"z":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"A function φ is refinable with respect to a mask m (a finitely\\nsupported sequence of numbers) when φ(t) = 2 Σ_j m_j φ(2t - j) Refinable functions are the building blocks of subdivision schemes and\\nwavelets. Most of them have no closed form, but polynomials do, and for\\npolynomials the relation can be solved exactly in both directions. refinemask does that with exact rational arithmetic. There is no\\nfloating point anywhere in the library, so every identity in this book is\\nchecked with ==.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A polynomial is written as its coefficients in ascending order, so 5/2,-3,1 is t² - 3t + 5/2. A mask is written as the index of its first\\nentry, a colon, and its entries: 0:1/64,3/64,3/64,1/64 has m_0 = 1/64\\nthrough m_3 = 1/64, and -1:1/2 is the single entry m_{-1} = 1/2. #![allow(unused)] fn main() {\\nuse refinemask::{refine_apply, Mask, Polynomial}; let m: Mask = \\"0:1/16,3/16,3/16,1/16\\".parse()?;\\nlet one: Polynomial = \\"1\\".parse()?; // The right-hand side of the relation, computed symbolically.\\nassert_eq!(refine_apply(&m, &one), one); let line: Polynomial = \\"0,1\\".parse()?;\\n// t is not refined by this mask: the relation maps it to 2t - 3/2.\\nassert_eq!(refine_apply(&m, &line).to_string(), \\"-3/2,2\\"); Ok::<(), refinemask::Error>(()) } Both types print back in the same format they parse, with every rational\\nfully reduced.","breadcrumbs":"Introduction » Text formats","id":"1","title":"Text formats"},"10":{"body":"Halving the mask goes the other way. But an antiderivative is only known up\\nto a constant, and only one constant makes it refinable. For an\\nantiderivative Φ with zero constant term, the constant is c = Σ m_j Φ(-j) / (1 - Σ m_j) where m is the halved mask. When Σ m_j = 1 there is no unique answer. If Σ m_j Φ(-j) also vanishes, every constant works. Otherwise none does. #![allow(unused)] fn main() {\\nuse refinemask::{antiderivative_constant, integration_constant, IntegrationConstant, Mask, Polynomial};\\nuse refinemask::algebra::ratio; let m: Mask = \\"0:1/16,3/16,3/16,1/16\\".parse()?;\\nlet c = antiderivative_constant(&m, &\\"1\\".parse()?)?;\\nassert_eq!(c, IntegrationConstant::Unique(ratio(-3, 2))); // Sum-one masks, checked directly against the antiderivative t.\\nlet t: Polynomial = \\"0,1\\".parse()?;\\nassert_eq!(integration_constant(&Mask::delta(), &t), IntegrationConstant::Arbitrary);\\nassert_eq!( integration_constant(&Mask::impulse(1, ratio(1, 1)), &t), IntegrationConstant::Impossible\\n); Ok::<(), refinemask::Error>(()) } antiderivative_pair applies the constant for you: #![allow(unused)] fn main() {\\nuse refinemask::RefinablePair; let pair = RefinablePair::from_mask(\\"0:1/32,3/32,3/32,1/32\\".parse()?)?;\\nlet up = pair.antiderivative_pair()?;\\nassert_eq!(up.mask().to_string(), \\"0:1/64,3/64,3/64,1/64\\");\\nassert_eq!(up.poly().to_string(), \\"5/4,-3/2,1/2\\");\\nassert_eq!(up.derivative_pair()?, pair); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"Derivatives, antiderivatives and products » Antiderivatives","id":"10","title":"Antiderivatives"},"11":{"body":"The convolution of masks with sums 2^(-a-1) and 2^(-b-1) has sum 2^(-a-b-2), so it refines a polynomial of degree a + b + 1. poly_convolve_via_masks uses this to combine two polynomials. The result\\ndepends on which masks are chosen, so it is not a ring operation. #![allow(unused)] fn main() {\\nuse refinemask::{poly_convolve_via_masks, Polynomial}; let p: Polynomial = \\"5/2,-3,1\\".parse()?;\\nlet q: Polynomial = \\"-3/2,1\\".parse()?;\\nlet r = poly_convolve_via_masks(&p, &q)?;\\nassert_eq!(r.degree(), Some(4));\\nassert_eq!(r.leading_coeff().to_string(), \\"1\\"); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"Derivatives, antiderivatives and products » Products of masks","id":"11","title":"Products of masks"},"12":{"body":"For functions that are not polynomials, the usual way to find a refinable\\nfunction is to iterate the refinement operator from some starting guess. On\\npolynomials of degree n that operator is an upper triangular matrix. When\\nthe mask sum is 2^(-n-1) its diagonal is 2^(-n), …, 1/2, 1. #![allow(unused)] fn main() {\\nuse refinemask::{poly_from_mask, refinement_matrix, Mask};\\nuse refinemask::algebra::ratio; let m: Mask = \\"0:1/64,3/64,3/64,1/64\\".parse()?;\\nlet a = refinement_matrix(&m, 2);\\nassert_eq!(a.diagonal(), vec![ratio(1, 4), ratio(1, 2), ratio(1, 1)]); // The refined polynomial is the eigenvector for 1, and its derivative the\\n// eigenvector for 1/2.\\nlet p = poly_from_mask(&m)?;\\nassert_eq!(a.mul_vec(&p.padded(3))?, p.padded(3));\\nlet d = p.derivative().padded(3);\\nlet half: Vec<_> = d.iter().map(|c| c * ratio(1, 2)).collect();\\nassert_eq!(a.mul_vec(&d)?, half); Ok::<(), refinemask::Error>(()) } Power iteration therefore converges to the refined polynomial, and the error\\nhalves at every step. The start only needs the right degree. tⁿ always\\nworks because the fixed point is monic. #![allow(unused)] fn main() {\\nuse refinemask::{cascade, cascade_iterates, poly_from_mask, Mask, Polynomial};\\nuse refinemask::algebra::{pow2, ratio, sup_distance}; let m: Mask = \\"0:1/64,3/64,3/64,1/64\\".parse()?;\\nlet exact = poly_from_mask(&m)?;\\nlet start = Polynomial::monomial(2); let errors: Vec<_> = cascade_iterates(&m, &start)? .take(12) .map(|p| sup_distance(p.coeffs(), exact.coeffs())) .collect();\\nlet rate = &errors[11] / &errors[10];\\nassert!(rate > ratio(2, 5) && rate < ratio(3, 5)); let tol = pow2(-40);\\nlet report = cascade(&m, &start, 60, &tol)?;\\nassert!(report.converged);\\nassert!(sup_distance(report.result.coeffs(), exact.coeffs()) < tol); Ok::<(), refinemask::Error>(()) } The iterates stay exact rationals, so their denominators grow with each step.\\nThe stopping rule compares two consecutive iterates. With contraction 1/2,\\nthe remaining error is about the size of the last step.","breadcrumbs":"The cascade algorithm » The cascade algorithm","id":"12","title":"The cascade algorithm"},"13":{"body":"The refinemask binary wraps the library. Masks and polynomials use the\\nsame text formats as FromStr. A value that starts with a minus sign can be\\npassed as is. $ refinemask poly-from-mask 0:1/64,3/64,3/64,1/64\\n5/2,-3,1\\n$ refinemask mask-from-poly 5/2,-3,1\\n0:1/32,0,3/32\\n$ refinemask mask-from-poly 5/2,-3,1 --nodes -1,0,1\\n-1:3/32,-1/4,9/32\\n$ refinemask verify 0:3/8,-3/8,1/8 1,2,1\\nOK\\n$ refinemask equiv 0:1/64,3/64,3/64,1/64 0:1/32,0,3/32\\nequivalent\\nwitness: 0:-1/64\\n$ refinemask reduce -2:1/4,1/4,-1/4\\n0:1,-3/4 cascade prints a small report. result holds the exact final iterate and approx the same coefficients as decimals. $ refinemask cascade 0:1/64,3/64,3/64,1/64 --max-iter 60\\nconverged: true\\niterations: 43\\nfinal_delta: 19791209299965/38685626227668133590597632\\nresult: 96714065569150542767194113/38685626227668133590597632,-26388279066621/8796093022208,1\\napprox: 2.5,-3,1 render-csv samples the refined polynomial on [t-min, t-max]. The total column is p(t). There is one part_j column per mask entry,\\nholding 2 m_j p(2t - j). The parts add up to the total. $ refinemask render-csv 0:1/32,0,3/32 --t-min -1/2 --t-max 1 --samples 4\\nt,total,part_0,part_1,part_2\\n-0.5,4.25,0.40625,0,3.84375\\n0,2.5,0.15625,0,2.34375\\n0.5,1.25,0.03125,0,1.21875\\n1,0.5,0.03125,0,0.46875 Exit codes: code meaning 0 success 1 the input cannot be handled (for example, a mask sum that is not a power of two), or a check came out negative 2 an argument could not be parsed 3 the output file could not be written","breadcrumbs":"Command line » Command line","id":"13","title":"Command line"},"2":{"body":"Take a polynomial of degree n and compare leading coefficients on both\\nsides of the refinement relation. The right side scales tⁿ by 2·2ⁿ·Σ m_j, so a mask can only refine a degree n polynomial when Σ m_j = 2^(-n-1) The converse holds too: every mask with that sum refines exactly one monic\\npolynomial of degree n. So the degree is read off the sum. #![allow(unused)] fn main() {\\nuse refinemask::{poly_from_mask, Mask}; for (mask, degree) in [(\\"0:1/2\\", 0), (\\"-1:1/8,1/8\\", 1), (\\"0:3/8,-3/8,1/8\\", 2)] { let m: Mask = mask.parse()?; assert_eq!(m.degree_from_sum()?, degree);\\n} // Σ m_j = 1 is not a power of two below one: no polynomial at all.\\nlet bad: Mask = \\"0:1/8,3/8,3/8,1/8\\".parse()?;\\nassert!(poly_from_mask(&bad).is_err()); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"From masks to polynomials » From masks to polynomials","id":"2","title":"From masks to polynomials"},"3":{"body":"poly_from_mask builds the answer one degree at a time. It starts with the\\nconstant 1, refined by 2ⁿ·m. Each step integrates the current polynomial\\nand halves the mask. The new integration constant is then fixed by a single\\nlinear condition. After n steps the mask is back to m and the polynomial\\nhas degree n. The binomial masks (1,3,3,1)/2^k make a good chain to follow: #![allow(unused)] fn main() {\\nuse refinemask::{poly_from_mask, verify_refines, Mask}; let chain = [ (\\"0:1/16,3/16,3/16,1/16\\", \\"1\\"), (\\"0:1/32,3/32,3/32,1/32\\", \\"-3/2,1\\"), (\\"0:1/64,3/64,3/64,1/64\\", \\"5/2,-3,1\\"),\\n];\\nfor (mask, poly) in chain { let m: Mask = mask.parse()?; let p = poly_from_mask(&m)?; assert_eq!(p.to_string(), poly); assert!(verify_refines(&m, &p));\\n} // A mask that is not symmetric works just as well.\\nlet m: Mask = \\"0:3/8,-3/8,1/8\\".parse()?;\\nassert_eq!(poly_from_mask(&m)?.to_string(), \\"1,2,1\\"); Ok::<(), refinemask::Error>(()) } The result is always monic. Any nonzero multiple of it is refined by the same\\nmask, since the relation is linear in the function.","breadcrumbs":"From masks to polynomials » Computing the polynomial","id":"3","title":"Computing the polynomial"},"4":{"body":"Going the other way, a polynomial p of degree n is refined by exactly one\\nmask supported on {0, …, n}. Matching coefficients gives an (n+1)×(n+1) linear system whose columns are the shifts p(t - j). mask_from_poly never forms that system. It switches to the backward\\ndifferences p, Δp, …, Δⁿp, where Δp(t) = p(t-1) - p(t). Each difference\\nlowers the degree by one, so in that basis the system is triangular. The\\nchange of basis is a product of bidiagonal factors that are inverted in\\nplace. #![allow(unused)] fn main() {\\nuse refinemask::{mask_from_poly, poly_from_mask, verify_refines, Polynomial}; let p: Polynomial = \\"5/2,-3,1\\".parse()?;\\nlet m = mask_from_poly(&p)?;\\nassert_eq!(m.to_string(), \\"0:1/32,0,3/32\\");\\nassert!(verify_refines(&m, &p)); // Scaling the polynomial does not change its mask.\\nlet q = p.scale(&refinemask::algebra::ratio(-7, 3));\\nassert_eq!(mask_from_poly(&q)?, m); // And the round trip recovers the monic polynomial.\\nassert_eq!(poly_from_mask(&m)?, p); Ok::<(), refinemask::Error>(()) } The triangular matrix itself is available as difference_matrix: #![allow(unused)] fn main() {\\nuse refinemask::{difference_matrix, Polynomial}; let p: Polynomial = \\"5/2,-3,1\\".parse()?;\\nlet u = difference_matrix(&p)?;\\nassert_eq!(u.column(0), p.coeffs().to_vec());\\nassert!(u.reverse_columns().is_upper_triangular()); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"From polynomials to masks » From polynomials to masks","id":"4","title":"From polynomials to masks"},"5":{"body":"Any n + 1 distinct integers can serve as the support. For those, mask_from_poly_at_nodes solves a Vandermonde system. #![allow(unused)] fn main() {\\nuse refinemask::{mask_from_poly, mask_from_poly_at_nodes, verify_refines, Polynomial}; let p: Polynomial = \\"5/2,-3,1\\".parse()?;\\nassert_eq!(mask_from_poly_at_nodes(&p, &[0, 1, 2])?, mask_from_poly(&p)?); let centred = mask_from_poly_at_nodes(&p, &[-1, 0, 1])?;\\nassert_eq!(centred.offset(), -1);\\nassert!(verify_refines(&centred, &p)); // Too few nodes, or repeated ones, are rejected.\\nassert!(mask_from_poly_at_nodes(&p, &[0, 1]).is_err());\\nassert!(mask_from_poly_at_nodes(&p, &[0, 1, 1]).is_err()); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"From polynomials to masks » Other supports","id":"5","title":"Other supports"},"6":{"body":"A mask supported on more than n + 1 points is not determined by the\\npolynomial it refines. The mask (1,-1)^(n+1), the coefficients of (1 - z)^(n+1), is an (n+1)-fold difference. It sends every polynomial of\\ndegree at most n to zero. So adding any multiple of it leaves the\\nrefinement unchanged: m ~ m + v * (1,-1)^(n+1) for any finite mask v Those are all of them. Two masks refine the same degree n polynomial\\nexactly when their difference is divisible by (1,-1)^(n+1). #![allow(unused)] fn main() {\\nuse refinemask::{difference_power, extend_mask, mask_from_poly, verify_refines, Mask, Polynomial}; assert_eq!(difference_power(3)?.to_string(), \\"0:1,-3,3,-1\\"); let p: Polynomial = \\"5/2,-3,1\\".parse()?;\\nlet short = mask_from_poly(&p)?;\\nlet v: Mask = \\"-2:1,0,1/5\\".parse()?;\\nlet long = extend_mask(&short, &v, 2);\\nassert_eq!(long.offset(), -2);\\nassert!(verify_refines(&long, &p)); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"Equivalent masks » Equivalent masks","id":"6","title":"Equivalent masks"},"7":{"body":"Division by (1,-1)^(n+1) runs in the ring of Laurent polynomials. The\\nremainder is the unique equivalent mask supported on {0, …, n}. reduce_mod_difference returns both remainder and quotient. equivalence_witness compares two masks through their remainders and returns\\nthe v that turns the second into the first. #![allow(unused)] fn main() {\\nuse refinemask::{equivalence_witness, extend_mask, masks_equivalent, reduce_mod_difference, Mask}; let long: Mask = \\"0:1/64,3/64,3/64,1/64\\".parse()?;\\nlet short: Mask = \\"0:1/32,0,3/32\\".parse()?; let (remainder, quotient) = reduce_mod_difference(&long, 2);\\nassert_eq!(remainder, short);\\nassert_eq!(extend_mask(&remainder, &quotient, 2), long); let v = equivalence_witness(&long, &short).expect(\\"same polynomial\\");\\nassert_eq!(v.to_string(), \\"0:-1/64\\"); // Same degree, different polynomial.\\nlet other: Mask = \\"0:1/16,0,1/16\\".parse()?;\\nassert!(!masks_equivalent(&long, &other)); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"Equivalent masks » Reduction","id":"7","title":"Reduction"},"8":{"body":"","breadcrumbs":"Derivatives, antiderivatives and products » Derivatives, antiderivatives and products","id":"8","title":"Derivatives, antiderivatives and products"},"9":{"body":"Differentiate both sides of the refinement relation and a factor of two\\nappears. If m refines p, then 2m refines p\'. RefinablePair keeps a\\nmask together with a polynomial it refines, and moves both at once: #![allow(unused)] fn main() {\\nuse refinemask::{Mask, RefinablePair}; let pair = RefinablePair::from_mask(\\"0:1/64,3/64,3/64,1/64\\".parse()?)?;\\nassert_eq!(pair.poly().to_string(), \\"5/2,-3,1\\"); let d = pair.derivative_pair()?;\\nassert_eq!(d.mask().to_string(), \\"0:1/32,3/32,3/32,1/32\\");\\nassert_eq!(d.poly().to_string(), \\"-3,2\\"); let dd = d.derivative_pair()?;\\nassert_eq!(dd.poly().to_string(), \\"2\\");\\nassert!(dd.derivative_pair().is_err()); Ok::<(), refinemask::Error>(()) }","breadcrumbs":"Derivatives, antiderivatives and products » Derivatives","id":"9","title":"Derivatives"}},"docInfo":{"0":{"body":42,"breadcrumbs":2,"title":1},"1":{"body":76,"breadcrumbs":3,"title":2},"10":{"body":100,"breadcrumbs":4,"title":1},"11":{"body":50,"breadcrumbs":5,"title":2},"12":{"body":165,"breadcrumbs":4,"title":2},"13":{"body":157,"breadcrumbs":4,"title":2},"2":{"body":73,"breadcrumbs":4,"title":2},"3":{"body":90,"breadcrumbs":4,"title":2},"4":{"body":112,"breadcrumbs":4,"title":2},"5":{"body":51,"breadcrumbs":3,"title":1},"6":{"body":82,"breadcrumbs":4,"title":2},"7":{"body":71,"breadcrumbs":3,"title":1},"8":{"body":0,"breadcrumbs":6,"title":3},"9":{"body":47,"breadcrumbs":4,"title":1}},"length":14},"lang":"English"}}'));